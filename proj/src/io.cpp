#include "p3lie/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>

namespace p3lie {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InputError(where + ": " + what);
}

int getDim(const Json& j, const std::string& where) {
    if (!j.contains("dim") || !j["dim"].is_number_integer()) fail(where, "missing integer 'dim'");
    int n = j["dim"].get<int>();
    if (n < 0) fail(where, "'dim' is negative");
    return n;
}

bool getClosure(const Json& j, const LoadOptions& opts) {
    if (opts.forceNoClosure) return false;
    if (j.contains("closure")) {
        if (!j["closure"].is_boolean()) throw InputError("'closure' must be a boolean");
        return j["closure"].get<bool>();
    }
    return true;
}

Scalar entryValue(const Json& e, const std::string& where) {
    const Json& v = e.back();
    if (v.is_string()) return Scalar::parse(v.get<std::string>());
    if (v.is_number_integer()) return Scalar(v.get<long>());
    fail(where, "value must be a scalar string or integer");
}

int entryIndex(const Json& e, std::size_t pos, int extent, const std::string& where) {
    const Json& v = e[pos];
    if (!v.is_number_integer()) fail(where, "index is not an integer");
    const int idx = v.get<int>();
    if (idx < 1 || idx > extent)
        fail(where, "index " + std::to_string(idx) + " out of range 1.." + std::to_string(extent));
    return idx - 1;
}

// writes cells, rejecting conflicting duplicate writes (identical repeats pass)
class CellWriter {
public:
    explicit CellWriter(const std::string& where) : where_(where) {}

    void set(Tensor& t, std::initializer_list<int> idx, const Scalar& v, int entryNo) {
        std::vector<int> key(idx);
        Scalar& cell = t.at(std::span<const int>(key.data(), key.size()));
        auto it = written_.find(key);
        if (it != written_.end()) {
            if (!(cell == v))
                fail(where_, "entry " + std::to_string(entryNo) +
                                 " conflicts with entry " + std::to_string(it->second) +
                                 " writing the same cell");
            return;
        }
        cell = v;
        written_.emplace(std::move(key), entryNo);
    }

private:
    std::string where_;
    std::map<std::vector<int>, int> written_;
};

void loadProductEntries(Tensor& t, const Json& arr, int n, bool closure, bool copStyle,
                        const std::string& where) {
    if (!arr.is_array()) fail(where, "expected an array of entries");
    CellWriter w(where);
    int entryNo = 0;
    for (const Json& e : arr) {
        ++entryNo;
        if (!e.is_array() || e.size() != 4) fail(where, "entry must be [i, j, l, value]");
        const int i = entryIndex(e, 0, n, where);
        const int j = entryIndex(e, 1, n, where);
        const int l = entryIndex(e, 2, n, where);
        const Scalar v = entryValue(e, where);
        // product entries are (i, j -> l); coproduct entries are (k -> i, j)
        const int sym1 = copStyle ? j : i, sym2 = copStyle ? l : j;
        w.set(t, {i, j, l}, v, entryNo);
        if (closure && sym1 != sym2) {
            if (copStyle)
                w.set(t, {i, l, j}, v, entryNo);
            else
                w.set(t, {j, i, l}, v, entryNo);
        }
    }
}

void loadBracketEntries(Tensor& t, const Json& arr, int n, bool closure, bool copStyle,
                        const std::string& where) {
    if (!arr.is_array()) fail(where, "expected an array of entries");
    CellWriter w(where);
    int entryNo = 0;
    for (const Json& e : arr) {
        ++entryNo;
        if (!e.is_array() || e.size() != 5) fail(where, "entry must be [i, j, k, l, value]");
        const int i = entryIndex(e, 0, n, where);
        const int j = entryIndex(e, 1, n, where);
        const int k = entryIndex(e, 2, n, where);
        const int l = entryIndex(e, 3, n, where);
        const Scalar v = entryValue(e, where);
        // antisymmetric triple: (i,j,k) for brackets, (j,k,l) for coproducts
        const int a = copStyle ? j : i, b = copStyle ? k : j, c = copStyle ? l : k;
        if (!closure) {
            w.set(t, {i, j, k, l}, v, entryNo);
            continue;
        }
        if (a == b || b == c || a == c) {
            if (!v.isZero())
                fail(where, "entry " + std::to_string(entryNo) +
                                " has a repeated index; antisymmetry forces zero");
            continue;
        }
        const int perm[6][3] = {{a, b, c}, {b, c, a}, {c, a, b}, {b, a, c}, {a, c, b}, {c, b, a}};
        const int sgn[6] = {1, 1, 1, -1, -1, -1};
        for (int p = 0; p < 6; ++p) {
            const Scalar sv = sgn[p] > 0 ? v : -v;
            if (copStyle)
                w.set(t, {i, perm[p][0], perm[p][1], perm[p][2]}, sv, entryNo);
            else
                w.set(t, {perm[p][0], perm[p][1], perm[p][2], l}, sv, entryNo);
        }
    }
}

Algebra loadAlgebra(const Json& j, const LoadOptions& opts) {
    const std::string where = "algebra";
    const int n = getDim(j, where);
    const bool closure = getClosure(j, opts);
    Algebra a = Algebra::zero(n);
    if (j.contains("basis")) {
        if (!j["basis"].is_array()) fail(where, "'basis' must be an array of names");
        for (const Json& name : j["basis"]) a.basis.push_back(name.get<std::string>());
        if (static_cast<int>(a.basis.size()) != n) fail(where, "'basis' length != dim");
    }
    if (j.contains("product")) loadProductEntries(a.product, j["product"], n, closure, false, where + ".product");
    if (j.contains("bracket")) loadBracketEntries(a.bracket, j["bracket"], n, closure, false, where + ".bracket");
    return a;
}

Coalgebra loadCoalgebra(const Json& j, const LoadOptions& opts) {
    const std::string where = "coalgebra";
    const int n = getDim(j, where);
    const bool closure = getClosure(j, opts);
    Coalgebra co = Coalgebra::zero(n);
    if (j.contains("Delta")) loadProductEntries(co.cop2, j["Delta"], n, closure, true, where + ".Delta");
    if (j.contains("delta")) loadBracketEntries(co.cop3, j["delta"], n, closure, true, where + ".delta");
    return co;
}

Json readFileJson(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("parse error in " + path.string() + ": " + e.what());
    }
    return j;
}

Algebra loadAlgebraOrRef(const Json& j, const LoadOptions& opts, const std::string& where) {
    if (j.is_object() && j.contains("file")) {
        const std::filesystem::path ref = opts.baseDir / j["file"].get<std::string>();
        Json inner = readFileJson(ref);
        LoadOptions sub = opts;
        sub.baseDir = ref.parent_path();
        LoadedObject obj = load_object(inner, sub);
        if (auto* a = std::get_if<Algebra>(&obj)) return *a;
        fail(where, "referenced file is not an algebra: " + ref.string());
    }
    return loadAlgebra(j, opts);
}

void loadMuEntries(std::vector<Matrix>& mu, const Json& arr, int n, int m,
                   const std::string& where) {
    if (!arr.is_array()) fail(where, "expected an array of entries");
    for (const Json& e : arr) {
        if (!e.is_array() || e.size() != 4) fail(where, "entry must be [i, r, c, value]");
        const int i = entryIndex(e, 0, n, where);
        const int r = entryIndex(e, 1, m, where);
        const int c = entryIndex(e, 2, m, where);
        mu[i].at(r, c) = entryValue(e, where);
    }
}

void loadRhoEntries(std::vector<std::vector<Matrix>>& rho, const Json& arr, int n, int m,
                    bool closure, const std::string& where) {
    if (!arr.is_array()) fail(where, "expected an array of entries");
    for (const Json& e : arr) {
        if (!e.is_array() || e.size() != 5) fail(where, "entry must be [i, j, r, c, value]");
        const int i = entryIndex(e, 0, n, where);
        const int j = entryIndex(e, 1, n, where);
        const int r = entryIndex(e, 2, m, where);
        const int c = entryIndex(e, 3, m, where);
        const Scalar v = entryValue(e, where);
        if (closure) {
            if (i == j) {
                if (!v.isZero()) fail(where, "rho(e_i, e_i) must vanish under closure");
                continue;
            }
            rho[i][j].at(r, c) = v;
            rho[j][i].at(r, c) = -v;
        } else {
            rho[i][j].at(r, c) = v;
        }
    }
}

Representation loadRepresentation(const Json& j, const LoadOptions& opts) {
    const std::string where = "representation";
    if (!j.contains("base")) fail(where, "missing 'base'");
    const Algebra base = loadAlgebraOrRef(j["base"], opts, where + ".base");
    if (!j.contains("carrier_dim") || !j["carrier_dim"].is_number_integer())
        fail(where, "missing integer 'carrier_dim'");
    const int carrier = j["carrier_dim"].get<int>();
    if (carrier < 0) fail(where, "'carrier_dim' is negative");
    Representation rep = Representation::zero(base, carrier);
    const bool closure = getClosure(j, opts);
    if (j.contains("mu")) loadMuEntries(rep.mu, j["mu"], rep.base.dim, rep.carrierDim, where + ".mu");
    if (j.contains("rho"))
        loadRhoEntries(rep.rho, j["rho"], rep.base.dim, rep.carrierDim, closure, where + ".rho");
    return rep;
}

MatchedPair loadMatchedPair(const Json& j, const LoadOptions& opts) {
    const std::string where = "matched_pair";
    if (!j.contains("algebra_a") || !j.contains("algebra_b"))
        fail(where, "missing 'algebra_a' or 'algebra_b'");
    Algebra a = loadAlgebraOrRef(j["algebra_a"], opts, where + ".algebra_a");
    Algebra b = loadAlgebraOrRef(j["algebra_b"], opts, where + ".algebra_b");
    MatchedPair mp = MatchedPair::zero(a, b);
    const bool closure = getClosure(j, opts);
    if (j.contains("mu_a")) loadMuEntries(mp.muA, j["mu_a"], a.dim, b.dim, where + ".mu_a");
    if (j.contains("rho_a")) loadRhoEntries(mp.rhoA, j["rho_a"], a.dim, b.dim, closure, where + ".rho_a");
    if (j.contains("mu_b")) loadMuEntries(mp.muB, j["mu_b"], b.dim, a.dim, where + ".mu_b");
    if (j.contains("rho_b")) loadRhoEntries(mp.rhoB, j["rho_b"], b.dim, a.dim, closure, where + ".rho_b");
    return mp;
}

SearchTemplate loadTemplate(const Json& j) {
    const std::string where = "template";
    SearchTemplate t;
    t.dim = getDim(j, where);
    auto slotFromJson = [&](const Json& e, bool requireOp) {
        SlotRef s;
        std::size_t base = 0;
        if (requireOp) {
            if (!e.is_array() || e.size() < 4) fail(where, "free slot must be [op, indices...]");
            const std::string op = e[0].get<std::string>();
            if (op == "bracket")
                s.isBracket = true;
            else if (op != "product")
                fail(where, "free slot op must be 'product' or 'bracket'");
            base = 1;
        }
        const std::size_t want = (s.isBracket ? 4 : 3) + base;
        if (e.size() != want) fail(where, "slot has the wrong number of indices");
        for (std::size_t k = base; k < want; ++k)
            s.idx[k - base] = entryIndex(e, k, t.dim, where);
        return s;
    };
    if (j.contains("fixed")) {
        const Json& fixed = j["fixed"];
        if (fixed.contains("product"))
            for (const Json& e : fixed["product"]) {
                if (!e.is_array() || e.size() != 4) fail(where, "fixed product entry must be [i,j,l,value]");
                SlotRef s;
                for (int k = 0; k < 3; ++k) s.idx[k] = entryIndex(e, k, t.dim, where);
                t.fixed.emplace_back(s, entryValue(e, where));
            }
        if (fixed.contains("bracket"))
            for (const Json& e : fixed["bracket"]) {
                if (!e.is_array() || e.size() != 5) fail(where, "fixed bracket entry must be [i,j,k,l,value]");
                SlotRef s;
                s.isBracket = true;
                for (int k = 0; k < 4; ++k) s.idx[k] = entryIndex(e, k, t.dim, where);
                t.fixed.emplace_back(s, entryValue(e, where));
            }
    }
    if (j.contains("free"))
        for (const Json& e : j["free"]) t.freeSlots.push_back(slotFromJson(e, true));
    if (j.contains("coefficients"))
        for (const Json& c : j["coefficients"])
            t.coefficients.push_back(c.is_string() ? Scalar::parse(c.get<std::string>())
                                                   : Scalar(c.get<long>()));
    if (j.contains("families"))
        for (const Json& f : j["families"]) {
            auto fam = family_from_name(f.get<std::string>());
            if (!fam) fail(where, "unknown family: " + f.get<std::string>());
            t.families.push_back(*fam);
        }
    if (j.contains("budget")) t.budget = j["budget"].get<unsigned long long>();
    return t;
}

SplitDouble loadDouble(const Json& j, const LoadOptions& opts) {
    const std::string where = "double";
    SplitDouble d;
    d.algebra = loadAlgebra(j, opts);
    if (!j.contains("split") || !j["split"].is_number_integer())
        fail(where, "missing integer 'split'");
    d.split = j["split"].get<int>();
    if (d.split < 0 || d.split > d.algebra.dim) fail(where, "'split' out of range");
    d.form = Matrix(d.algebra.dim, d.algebra.dim);
    if (!j.contains("form")) fail(where, "missing 'form'");
    for (const Json& e : j["form"]) {
        if (!e.is_array() || e.size() != 3) fail(where, "form entry must be [i, j, value]");
        const int i = entryIndex(e, 0, d.algebra.dim, where);
        const int jj = entryIndex(e, 1, d.algebra.dim, where);
        d.form.at(i, jj) = entryValue(e, where);
    }
    return d;
}

}  // namespace

LoadedObject load_object(const Json& j, const LoadOptions& opts) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InputError("object must carry a string 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "algebra") return loadAlgebra(j, opts);
    if (kind == "coalgebra") return loadCoalgebra(j, opts);
    if (kind == "representation") return loadRepresentation(j, opts);
    if (kind == "matched_pair") return loadMatchedPair(j, opts);
    if (kind == "bundle") {
        if (!j.contains("algebra") || !j.contains("coalgebra"))
            throw InputError("bundle: missing 'algebra' or 'coalgebra'");
        Bundle b{loadAlgebraOrRef(j["algebra"], opts, "bundle.algebra"),
                 loadCoalgebra(j["coalgebra"], opts)};
        if (b.algebra.dim != b.coalgebra.dim)
            throw InputError("bundle: algebra and coalgebra dims differ");
        return b;
    }
    if (kind == "template") return loadTemplate(j);
    if (kind == "double") return loadDouble(j, opts);
    throw InputError("unknown kind: " + kind);
}

LoadedObject load_file(const std::filesystem::path& path, bool forceNoClosure) {
    Json j = readFileJson(path);
    LoadOptions opts;
    opts.forceNoClosure = forceNoClosure;
    opts.baseDir = path.parent_path();
    return load_object(j, opts);
}

const char* kind_name(const LoadedObject& obj) {
    struct Visitor {
        const char* operator()(const Algebra&) { return "algebra"; }
        const char* operator()(const Coalgebra&) { return "coalgebra"; }
        const char* operator()(const Representation&) { return "representation"; }
        const char* operator()(const MatchedPair&) { return "matched_pair"; }
        const char* operator()(const Bundle&) { return "bundle"; }
        const char* operator()(const SearchTemplate&) { return "template"; }
        const char* operator()(const SplitDouble&) { return "double"; }
    };
    return std::visit(Visitor{}, obj);
}

Json to_json(const Algebra& a) {
    Json j;
    j["kind"] = "algebra";
    j["dim"] = a.dim;
    if (!a.basis.empty()) j["basis"] = a.basis;
    Json prod = Json::array(), brk = Json::array();
    for (int i = 0; i < a.dim; ++i)
        for (int jj = 0; jj < a.dim; ++jj)
            for (int l = 0; l < a.dim; ++l)
                if (!a.product.at3(i, jj, l).isZero())
                    prod.push_back({i + 1, jj + 1, l + 1, a.product.at3(i, jj, l).str()});
    for (int i = 0; i < a.dim; ++i)
        for (int jj = 0; jj < a.dim; ++jj)
            for (int k = 0; k < a.dim; ++k)
                for (int l = 0; l < a.dim; ++l)
                    if (!a.bracket.at4(i, jj, k, l).isZero())
                        brk.push_back({i + 1, jj + 1, k + 1, l + 1, a.bracket.at4(i, jj, k, l).str()});
    j["closure"] = false;  // entries are written exhaustively
    j["product"] = std::move(prod);
    j["bracket"] = std::move(brk);
    return j;
}

Json to_json(const Coalgebra& co) {
    Json j;
    j["kind"] = "coalgebra";
    j["dim"] = co.dim;
    Json d2 = Json::array(), d3 = Json::array();
    for (int k = 0; k < co.dim; ++k)
        for (int i = 0; i < co.dim; ++i)
            for (int jj = 0; jj < co.dim; ++jj)
                if (!co.cop2.at3(k, i, jj).isZero())
                    d2.push_back({k + 1, i + 1, jj + 1, co.cop2.at3(k, i, jj).str()});
    for (int k = 0; k < co.dim; ++k)
        for (int i = 0; i < co.dim; ++i)
            for (int jj = 0; jj < co.dim; ++jj)
                for (int l = 0; l < co.dim; ++l)
                    if (!co.cop3.at4(k, i, jj, l).isZero())
                        d3.push_back({k + 1, i + 1, jj + 1, l + 1, co.cop3.at4(k, i, jj, l).str()});
    j["closure"] = false;
    j["Delta"] = std::move(d2);
    j["delta"] = std::move(d3);
    return j;
}

Json to_json(const SplitDouble& d) {
    Json j = to_json(d.algebra);
    j["kind"] = "double";
    j["split"] = d.split;
    Json form = Json::array();
    for (int i = 0; i < d.form.rows(); ++i)
        for (int jj = 0; jj < d.form.cols(); ++jj)
            if (!d.form.at(i, jj).isZero()) form.push_back({i + 1, jj + 1, d.form.at(i, jj).str()});
    j["form"] = std::move(form);
    return j;
}

Json to_json(const LawReport& report) {
    Json laws = Json::array();
    for (const auto& [name, result] : report.entries()) {
        Json entry;
        entry["law"] = name;
        entry["pass"] = result.pass;
        if (result.witness) {
            Json w;
            Json idx = Json::array();
            for (int i : result.witness->indices) idx.push_back(i + 1);
            w["indices"] = std::move(idx);
            Json lhs = Json::array(), rhs = Json::array();
            for (const Scalar& s : result.witness->lhs) lhs.push_back(s.str());
            for (const Scalar& s : result.witness->rhs) rhs.push_back(s.str());
            w["lhs"] = std::move(lhs);
            w["rhs"] = std::move(rhs);
            entry["witness"] = std::move(w);
        }
        laws.push_back(std::move(entry));
    }
    Json j;
    j["pass"] = report.allPass();
    j["laws"] = std::move(laws);
    return j;
}

Json to_json(const EquivalenceReport& eq) {
    Json j;
    Json stmts = Json::array();
    for (const auto& [name, report] : eq.statements) {
        Json s;
        s["statement"] = name;
        s["report"] = to_json(report);
        stmts.push_back(std::move(s));
    }
    j["statements"] = std::move(stmts);
    j["agree"] = eq.agree();
    j["pass"] = eq.allPass();
    return j;
}

std::string file_digest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path.string());
    unsigned long long h = 1469598103934665603ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return std::string(buf);
}

}  // namespace p3lie
