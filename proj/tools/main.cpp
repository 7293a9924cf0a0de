#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "p3lie/io.hpp"
#include "p3lie/linalg.hpp"

using namespace p3lie;

namespace {

// exit-code contract: 0 all pass, 1 a law/condition failed, 2 input error,
// 3 internal equivalence disagreement
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitDisagree = 3;

struct Run {
    std::string command;
    std::vector<std::string> args;
    bool jsonMode = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    Json inputs = Json::array();
    Json checks = Json::array();
    bool overall = true;

    void addInput(const std::string& path) {
        inputs.push_back({{"path", path}, {"digest", file_digest(path)}});
    }
    void addCheck(const std::string& name, const LawReport& report) {
        checks.push_back({{"name", name}, {"report", to_json(report)}});
        overall = overall && report.allPass();
        if (!jsonMode) {
            std::cout << name << ": " << (report.allPass() ? "PASS" : "FAIL") << "\n";
            for (const auto& [lawName, result] : report.entries()) {
                if (result.pass) continue;
                std::cout << "  failed " << lawName;
                if (result.witness) {
                    std::cout << " at (";
                    for (std::size_t i = 0; i < result.witness->indices.size(); ++i)
                        std::cout << (i ? "," : "") << result.witness->indices[i] + 1;
                    std::cout << ") lhs=[";
                    for (std::size_t i = 0; i < result.witness->lhs.size(); ++i)
                        std::cout << (i ? "," : "") << result.witness->lhs[i];
                    std::cout << "] rhs=[";
                    for (std::size_t i = 0; i < result.witness->rhs.size(); ++i)
                        std::cout << (i ? "," : "") << result.witness->rhs[i];
                    std::cout << "]";
                }
                std::cout << "\n";
            }
        }
    }

    // wall time is reported in human mode only, so machine output is
    // byte-identical across re-runs
    int finish(int code, const Json& extra = Json()) {
        if (jsonMode) {
            Json out;
            out["command"] = command;
            out["args"] = args;
            out["inputs"] = inputs;
            out["checks"] = checks;
            if (!extra.is_null())
                for (auto& [k, v] : extra.items()) out[k] = v;
            out["overall"] = overall ? "pass" : "fail";
            out["exit"] = code;
            std::cout << out.dump(2) << "\n";
        } else {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            std::cout << "overall: " << (overall ? "PASS" : "FAIL") << " (" << ms << " ms)\n";
        }
        return code;
    }
};

std::vector<Family> parseFamilies(const std::vector<std::string>& names) {
    std::vector<Family> out;
    for (const std::string& s : names) {
        auto f = family_from_name(s);
        if (!f) throw InputError("unknown family: " + s);
        out.push_back(*f);
    }
    return out;
}

Vec parseElement(const std::string& spec, int dim) {
    Vec h(static_cast<std::size_t>(dim), Scalar());
    if (!spec.empty() && spec[0] == 'e' && spec.find(',') == std::string::npos) {
        int idx = 0;
        try {
            idx = std::stoi(spec.substr(1));
        } catch (...) {
            throw InputError("bad element spec: " + spec);
        }
        if (idx < 1 || idx > dim) throw InputError("basis element out of range: " + spec);
        h[idx - 1] = Scalar(1);
        return h;
    }
    std::stringstream ss(spec);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= dim) throw InputError("too many coordinates in element: " + spec);
        h[i++] = Scalar::parse(tok);
    }
    if (i != dim) throw InputError("element needs " + std::to_string(dim) + " coordinates");
    return h;
}

void writeOutput(const Json& j, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(outPath);
    if (!out) throw InputError("cannot write: " + outPath);
    out << j.dump(2) << "\n";
}

int cmdValidate(Run& run, const std::string& path, std::vector<Family> families,
                bool noClosure) {
    run.addInput(path);
    LoadedObject obj = load_file(path, noClosure);

    struct Visitor {
        Run& run;
        std::vector<Family>& families;

        int operator()(const Algebra& a) {
            if (families.empty())
                families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
            for (Family f : families)
                run.addCheck(std::string("validate:") + family_name(f), validate(a, f));
            return run.overall ? kExitPass : kExitFail;
        }
        int operator()(const Coalgebra& co) {
            if (families.empty())
                families = {Family::CommAssoc, Family::ThreeLie, Family::Poisson,
                            Family::Admissible};
            for (Family f : families)
                run.addCheck(std::string("coalgebra:") + family_name(f),
                             validate_coalgebra(co, f));
            return run.overall ? kExitPass : kExitFail;
        }
        int operator()(const Representation& rep) {
            if (families.empty())
                families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
            for (Family f : families)
                run.addCheck(std::string("representation:") + family_name(f),
                             validate_representation(rep, f));
            return run.overall ? kExitPass : kExitFail;
        }
        int operator()(const MatchedPair& mp) {
            if (families.empty())
                families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
            for (Family f : families)
                run.addCheck(std::string("matched_pair:") + family_name(f),
                             check_matched_pair(mp, f));
            return run.overall ? kExitPass : kExitFail;
        }
        int operator()(const Bundle& b) {
            if (families.empty())
                families = {Family::CommAssoc, Family::ThreeLie, Family::Poisson,
                            Family::Admissible};
            for (Family f : families)
                run.addCheck(std::string("bialgebra:") + family_name(f),
                             check_bialgebra(b.algebra, b.coalgebra, f));
            return run.overall ? kExitPass : kExitFail;
        }
        int operator()(const SplitDouble& d) {
            if (families.empty())
                families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
            for (Family f : families)
                run.addCheck(std::string("validate:") + family_name(f), validate(d.algebra, f));
            run.addCheck("manin_triple", check_manin_triple(d));
            return run.overall ? kExitPass : kExitFail;
        }
        int operator()(const SearchTemplate&) {
            throw InputError("a template cannot be validated; use the search command");
        }
    };
    return std::visit(Visitor{run, families}, obj);
}

int cmdConstruct(Run& run, const std::string& op, const std::vector<std::string>& inputs,
                 const std::string& outPath, const std::string& elementSpec,
                 const std::vector<Family>& families, bool noClosure) {
    auto wantInputs = [&](std::size_t k) {
        if (inputs.size() != k)
            throw InputError(op + " expects " + std::to_string(k) + " input file(s)");
    };
    auto loadAlg = [&](const std::string& p) {
        run.addInput(p);
        LoadedObject o = load_file(p, noClosure);
        if (auto* a = std::get_if<Algebra>(&o)) return *a;
        if (auto* d = std::get_if<SplitDouble>(&o)) return d->algebra;
        throw InputError(p + " is not an algebra");
    };

    Json result;
    Algebra built;
    Family echoFamily = Family::Poisson;

    if (op == "direct-sum") {
        wantInputs(2);
        built = direct_sum(loadAlg(inputs[0]), loadAlg(inputs[1]));
        result = to_json(built);
    } else if (op == "tensor") {
        wantInputs(2);
        built = tensor_with_commutative(loadAlg(inputs[0]), loadAlg(inputs[1]));
        result = to_json(built);
    } else if (op == "twist") {
        wantInputs(1);
        Algebra a = loadAlg(inputs[0]);
        if (elementSpec.empty()) throw InputError("twist needs --h <element>");
        built = h_twist(a, parseElement(elementSpec, a.dim));
        result = to_json(built);
        echoFamily = Family::Transposed;
    } else if (op == "semidirect") {
        wantInputs(1);
        run.addInput(inputs[0]);
        LoadedObject o = load_file(inputs[0], noClosure);
        auto* rep = std::get_if<Representation>(&o);
        if (!rep) throw InputError(inputs[0] + " is not a representation");
        built = semidirect_product(*rep);
        result = to_json(built);
    } else if (op == "pair-sum") {
        wantInputs(1);
        run.addInput(inputs[0]);
        LoadedObject o = load_file(inputs[0], noClosure);
        auto* mp = std::get_if<MatchedPair>(&o);
        if (!mp) throw InputError(inputs[0] + " is not a matched pair");
        built = matched_pair_sum(*mp);
        result = to_json(built);
    } else if (op == "double") {
        Algebra alg;
        Coalgebra co;
        if (inputs.size() == 1) {
            run.addInput(inputs[0]);
            LoadedObject o = load_file(inputs[0], noClosure);
            auto* b = std::get_if<Bundle>(&o);
            if (!b) throw InputError(inputs[0] + " is not a bundle");
            alg = b->algebra;
            co = b->coalgebra;
        } else {
            wantInputs(2);
            alg = loadAlg(inputs[0]);
            run.addInput(inputs[1]);
            LoadedObject o = load_file(inputs[1], noClosure);
            auto* c = std::get_if<Coalgebra>(&o);
            if (!c) throw InputError(inputs[1] + " is not a coalgebra");
            co = *c;
        }
        SplitDouble d = double_construct(alg, co);
        built = d.algebra;
        result = to_json(d);
    } else {
        throw InputError("unknown construction: " + op +
                         " (expected direct-sum|tensor|twist|semidirect|pair-sum|double)");
    }

    if (!families.empty()) echoFamily = families.front();
    writeOutput(result, outPath);
    run.addCheck(std::string("result:") + family_name(echoFamily), validate(built, echoFamily));
    return run.overall ? kExitPass : kExitFail;
}

int cmdVerify(Run& run, const std::string& path, const std::vector<Family>& families,
              bool noClosure) {
    run.addInput(path);
    LoadedObject obj = load_file(path, noClosure);
    auto* b = std::get_if<Bundle>(&obj);
    if (!b) throw InputError(path + " is not a bundle");
    Family f = families.empty() ? Family::Admissible : families.front();
    EquivalenceReport eq = verify_equivalence(b->algebra, b->coalgebra, f);
    for (const auto& [name, report] : eq.statements)
        run.addCheck(std::string(family_name(f)) + ":" + name, report);
    Json extra;
    extra["agree"] = eq.agree();
    if (!run.jsonMode) std::cout << "equivalence: " << eq.summary() << "\n";
    if (!eq.agree()) return run.finish(kExitDisagree, extra);
    return run.finish(eq.allPass() ? kExitPass : kExitFail, extra);
}

int cmdSearch(Run& run, const std::string& path, unsigned long long budgetOverride,
              bool noClosure) {
    run.addInput(path);
    LoadedObject obj = load_file(path, noClosure);
    auto* t = std::get_if<SearchTemplate>(&obj);
    if (!t) throw InputError(path + " is not a template");
    SearchTemplate tpl = *t;
    if (budgetOverride != 0) tpl.budget = budgetOverride;

    Json hits = Json::array();
    std::size_t count = 0;
    enumerate_structures(tpl, [&](const SearchHit& h) {
        ++count;
        Json entry;
        Json assign = Json::array();
        for (const Scalar& s : h.assignment) assign.push_back(s.str());
        entry["assignment"] = std::move(assign);
        entry["algebra"] = to_json(h.algebra);
        hits.push_back(std::move(entry));
        if (!run.jsonMode) {
            std::cout << "hit " << count << ": assignment = [";
            for (std::size_t i = 0; i < h.assignment.size(); ++i)
                std::cout << (i ? "," : "") << h.assignment[i];
            std::cout << "]\n";
        }
    });
    if (!run.jsonMode) std::cout << "hits: " << count << "\n";
    Json extra;
    extra["hits"] = std::move(hits);
    extra["hit_count"] = count;
    return run.finish(kExitPass, extra);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure-constant checker for (transposed) Poisson 3-Lie algebras"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // frees --h for the twist element

    std::vector<std::string> familyNames;
    bool jsonMode = false, noClosure = false;

    auto addCommon = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print help");
        sub->add_option("--family", familyNames,
                        "family: comm-assoc|3-lie|poisson|transposed|admissible");
        sub->add_flag("--json", jsonMode, "machine-readable report on stdout");
        sub->add_flag("--no-closure", noClosure, "load entries literally, skip closures");
    };

    std::string valPath;
    CLI::App* val = app.add_subcommand("validate", "check the laws of an object file");
    val->add_option("file", valPath)->required();
    addCommon(val);

    std::string conOp, conOut, conElem;
    std::vector<std::string> conInputs;
    CLI::App* con = app.add_subcommand("construct", "build a derived object and validate it");
    con->add_option("op", conOp, "direct-sum|tensor|twist|semidirect|pair-sum|double")
        ->required();
    con->add_option("inputs", conInputs, "input object files");
    con->add_option("-o,--out", conOut, "output file (stdout when omitted)");
    con->add_option("--h", conElem, "twist element: e<k> or comma-separated coordinates");
    addCommon(con);

    std::string verPath;
    CLI::App* ver = app.add_subcommand("verify", "run the equivalence-theorem harness on a bundle");
    ver->add_option("bundle", verPath)->required();
    addCommon(ver);

    std::string seaPath;
    unsigned long long seaBudget = 0;
    CLI::App* sea = app.add_subcommand("search", "enumerate structure constants from a template");
    sea->add_option("template", seaPath)->required();
    sea->add_option("--budget", seaBudget, "override the template's candidate budget");
    addCommon(sea);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitInput;
    }

    Run run;
    run.jsonMode = jsonMode;
    for (int i = 1; i < argc; ++i) run.args.push_back(argv[i]);
    run.command = run.args.empty() ? "" : run.args.front();

    try {
        std::vector<Family> families = parseFamilies(familyNames);
        if (val->parsed()) {
            int code = cmdValidate(run, valPath, families, noClosure);
            return run.finish(code);
        }
        if (con->parsed()) {
            int code = cmdConstruct(run, conOp, conInputs, conOut, conElem, families, noClosure);
            return run.finish(code);
        }
        if (ver->parsed()) return cmdVerify(run, verPath, families, noClosure);
        if (sea->parsed()) return cmdSearch(run, seaPath, seaBudget, noClosure);
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        for (const std::string& law : e.report.failing()) std::cerr << "  failed: " << law << "\n";
        return kExitFail;
    } catch (const BudgetError& e) {
        std::cerr << "refused: " << e.what() << " (required " << e.required << ")\n";
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
