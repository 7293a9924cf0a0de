#ifndef P3LIE_IO_HPP
#define P3LIE_IO_HPP

#include <filesystem>
#include <variant>

#include <json.hpp>

#include "p3lie/manin.hpp"
#include "p3lie/search.hpp"

namespace p3lie {

using Json = nlohmann::ordered_json;

/*
 * One JSON file format family, discriminated by "kind":
 *   algebra        dim, basis?, product [[i,j,l,v]...], bracket [[i,j,k,l,v]...]
 *   coalgebra      dim, Delta [[k,i,j,v]...], delta [[k,i,j,l,v]...]
 *   representation base (inline or {"file": path}), carrier_dim,
 *                  mu [[i,r,c,v]...], rho [[i,j,r,c,v]...]
 *   matched_pair   algebra_a, algebra_b, mu_a, rho_a, mu_b, rho_b
 *   bundle         algebra, coalgebra
 *   template       dim, fixed {product, bracket}, free [["product",i,j,l]|
 *                  ["bracket",i,j,k,l]...], coefficients, families, budget
 *   double         algebra fields plus split and form
 * Indices are 1-based in files, values are Scalar strings. By default loads
 * complete the symmetric closure of products/Delta and the antisymmetric
 * closure of brackets/delta/rho ("closure": false or forceNoClosure disables).
 */
struct Bundle {
    Algebra algebra;
    Coalgebra coalgebra;
};

using LoadedObject =
    std::variant<Algebra, Coalgebra, Representation, MatchedPair, Bundle, SearchTemplate,
                 SplitDouble>;

struct LoadOptions {
    bool forceNoClosure = false;
    std::filesystem::path baseDir;  // for resolving {"file": ...} references
};

LoadedObject load_object(const Json& j, const LoadOptions& opts = {});
LoadedObject load_file(const std::filesystem::path& path, bool forceNoClosure = false);

const char* kind_name(const LoadedObject& obj);

Json to_json(const Algebra& a);
Json to_json(const Coalgebra& co);
Json to_json(const SplitDouble& d);
Json to_json(const LawReport& report);
Json to_json(const EquivalenceReport& eq);

// FNV-1a of the file bytes, as a 16-hex-digit string.
std::string file_digest(const std::filesystem::path& path);

}  // namespace p3lie

#endif
