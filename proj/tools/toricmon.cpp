// toricmon: Demazure roots, monoid structures and Cox lifts of affine
// toric varieties, with reproducible JSON and text reports.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "toricmon/bialg.hpp"
#include "toricmon/classify.hpp"
#include "toricmon/cones.hpp"
#include "toricmon/coxlift.hpp"
#include "toricmon/intlin.hpp"
#include "toricmon/linexpr.hpp"
#include "toricmon/toric.hpp"

using ojson = nlohmann::ordered_json;
using namespace toricmon;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
    std::string input = "-";
    std::string format = "text";
    long ray = 0;  // 1-based; 0 = unset
    std::string root;
    std::string structure;
    std::string u;
    unsigned bound = 3;
    unsigned count = 3;
    unsigned degree_bound = 2;
    unsigned samples = 25;
    std::uint64_t seed = 12345;
};

struct VarietyInput {
    std::vector<Vec> rays;
    std::size_t lattice_rank = 0;
};

VarietyInput read_input(const std::string& path) {
    ojson doc;
    try {
        if (path == "-") {
            doc = ojson::parse(std::cin);
        } else {
            std::ifstream in(path);
            if (!in) throw std::invalid_argument("cannot open input file: " + path);
            doc = ojson::parse(in);
        }
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid input JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rays") || !doc["rays"].is_array())
        throw std::invalid_argument("input must be a JSON object with a \"rays\" array");
    VarietyInput vi;
    for (const auto& row : doc["rays"]) {
        if (!row.is_array()) throw std::invalid_argument("each ray must be an array of integers");
        Vec r;
        for (const auto& entry : row) {
            if (entry.is_number_integer())
                r.push_back(Int(static_cast<long>(entry.get<long long>())));
            else if (entry.is_string())
                r.push_back(Int(entry.get<std::string>()));
            else
                throw std::invalid_argument("ray entries must be integers");
        }
        vi.rays.push_back(std::move(r));
    }
    if (doc.contains("lattice_rank")) {
        if (!doc["lattice_rank"].is_number_integer() || doc["lattice_rank"].get<long long>() < 0)
            throw std::invalid_argument("lattice_rank must be a nonnegative integer");
        vi.lattice_rank = doc["lattice_rank"].get<std::size_t>();
    } else if (!vi.rays.empty()) {
        vi.lattice_rank = vi.rays[0].size();
    } else {
        throw std::invalid_argument("lattice_rank is required when no rays are given");
    }
    return vi;
}

Vec parse_vec(const std::string& text) {
    Vec v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("malformed integer vector: " + text);
        v.push_back(Int(tok));
    }
    if (v.empty()) throw std::invalid_argument("empty vector argument");
    return v;
}

LinVec parse_linvec(const std::string& text) {
    LinVec v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(parse_linexpr(tok));
    if (v.empty()) throw std::invalid_argument("empty root argument");
    return v;
}

bool is_constant(const LinVec& v) {
    return std::all_of(v.begin(), v.end(), [](const LinExpr& e) { return e.is_constant(); });
}

Vec to_vec(const LinVec& v) {
    Vec r;
    for (const LinExpr& e : v) r.push_back(e.constant());
    return r;
}

ojson json_int(const Int& v) {
    if (v.fits_slong_p()) return ojson(v.get_si());
    return ojson(v.get_str());
}

ojson json_vec(const Vec& v) {
    ojson arr = ojson::array();
    for (const Int& x : v) arr.push_back(json_int(x));
    return arr;
}

ojson json_vecs(const std::vector<Vec>& vs) {
    ojson arr = ojson::array();
    for (const Vec& v : vs) arr.push_back(json_vec(v));
    return arr;
}

ojson json_mat(const Mat& m) {
    ojson arr = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(json_vec(m.row(i)));
    return arr;
}

std::string gen_name(std::size_t i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "g" + std::to_string(i + 1);
}

// x1^2*x2, with parenthesized negative or symbolic exponents
std::string cox_monomial(const std::vector<std::string>& exps, const std::string& var) {
    std::string out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        const std::string& e = exps[i];
        if (e == "0") continue;
        if (!out.empty()) out += "*";
        out += var + std::to_string(i + 1);
        if (e != "1") {
            bool simple = !e.empty() && e.find_first_not_of("0123456789") == std::string::npos;
            out += simple ? "^" + e : "^(" + e + ")";
        }
    }
    return out.empty() ? "1" : out;
}

std::vector<std::string> exp_strings(const Vec& v) {
    std::vector<std::string> out;
    for (const Int& x : v) out.push_back(x.get_str());
    return out;
}

std::vector<std::string> exp_strings(const LinVec& v) {
    std::vector<std::string> out;
    for (const LinExpr& e : v) out.push_back(e.to_string());
    return out;
}

// the corank-1 product formula in Cox coordinates, slot i carrying
// x_i y^{ebar,i} + x^{ebar,i} y_i
template <typename EVec>
std::string cox_product_formula(std::size_t slots, std::size_t ray_index, const EVec& ebar) {
    std::vector<std::string> exps = exp_strings(ebar);
    exps[ray_index] = "0";
    std::string xi = "x" + std::to_string(ray_index + 1);
    std::string yi = "y" + std::to_string(ray_index + 1);
    std::string xmono = cox_monomial(exps, "x");
    std::string ymono = cox_monomial(exps, "y");
    std::string out = "(";
    for (std::size_t j = 0; j < slots; ++j) {
        if (j) out += ", ";
        if (j == ray_index) {
            out += xi + (ymono == "1" ? "" : "*" + ymono) + " + " +
                   (xmono == "1" ? "" : xmono + "*") + yi;
        } else {
            out += "x" + std::to_string(j + 1) + "*y" + std::to_string(j + 1);
        }
    }
    return out + ")";
}

std::string rat_str(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

ojson make_report(const std::string& command, const VarietyInput& vi,
                  std::optional<std::uint64_t> seed) {
    ojson rep;
    rep["command"] = command;
    rep["version"] = kVersion;
    rep["input"] = ojson::object();
    rep["input"]["rays"] = json_vecs(vi.rays);
    rep["input"]["lattice_rank"] = vi.lattice_rank;
    if (seed)
        rep["seed"] = *seed;
    else
        rep["seed"] = nullptr;
    rep["results"] = ojson::object();
    rep["verification"] = nullptr;
    return rep;
}

void emit(const ojson& rep, const Options& opt, const std::string& text) {
    if (opt.format == "json")
        std::cout << rep.dump(2) << "\n";
    else
        std::cout << text;
}

std::string class_group_action(const CoxData& cox) {
    std::ostringstream os;
    std::size_t nt = cox.class_group.torsion.size();
    bool first = true;
    for (std::size_t t = 0; t < nt; ++t) {
        const Int& d = cox.class_group.torsion[t];
        if (!first) os << "; ";
        first = false;
        os << "Z/" << d << ": (";
        for (std::size_t i = 0; i < cox.total_coordinates(); ++i) {
            if (i) os << ",";
            os << "x" << i + 1;
        }
        os << ") -> (";
        for (std::size_t i = 0; i < cox.total_coordinates(); ++i) {
            if (i) os << ",";
            const Int& r = cox.degrees[i][t];
            if (d == 2 && r == 1)
                os << "-x" << i + 1;
            else if (r == 0)
                os << "x" << i + 1;
            else
                os << "zeta^" << r << "*x" << i + 1;
        }
        os << ")";
    }
    for (std::size_t f = 0; f < cox.class_group.free_rank; ++f) {
        if (!first) os << "; ";
        first = false;
        os << "K^x: t.(";
        for (std::size_t i = 0; i < cox.total_coordinates(); ++i) {
            if (i) os << ",";
            os << "x" << i + 1;
        }
        os << ") = (";
        for (std::size_t i = 0; i < cox.total_coordinates(); ++i) {
            if (i) os << ",";
            const Int& w = cox.degrees[i][nt + f];
            if (w == 0)
                os << "x" << i + 1;
            else if (w == 1)
                os << "t*x" << i + 1;
            else
                os << "t^" << w << "*x" << i + 1;
        }
        os << ")";
    }
    if (first) os << "trivial";
    return os.str();
}

struct StructureSpec {
    MonoidKind kind;
    std::size_t ray_index = 0;  // 0-based
    LinVec root;                // corank1 only
    bool symbolic = false;
};

StructureSpec resolve_structure(const AffineToricVariety& x, const Options& opt) {
    StructureSpec spec;
    std::string kind = opt.structure;
    if (kind.empty()) kind = opt.root.empty() ? "toric" : "corank1";
    if (kind == "toric") {
        spec.kind = MonoidKind::toric;
    } else if (kind == "additive") {
        spec.kind = MonoidKind::additive;
        make_additive(x);  // rejects anything but A^n
    } else if (kind == "corank1") {
        spec.kind = MonoidKind::corank1;
        if (opt.ray <= 0 || static_cast<std::size_t>(opt.ray) > x.ray_count())
            throw std::invalid_argument("corank1 needs --ray between 1 and " +
                                        std::to_string(x.ray_count()));
        if (opt.root.empty()) throw std::invalid_argument("corank1 needs --root");
        spec.ray_index = static_cast<std::size_t>(opt.ray - 1);
        spec.root = parse_linvec(opt.root);
        spec.symbolic = !is_constant(spec.root);
        if (!spec.symbolic && !is_demazure_root(x, spec.ray_index, to_vec(spec.root)))
            throw std::invalid_argument("not a Demazure root of this variety: " +
                                        to_string(to_vec(spec.root)));
        if (spec.symbolic) symbolic_root_constraints(x, spec.ray_index, spec.root);  // validates
    } else {
        throw std::invalid_argument("unknown structure: " + kind);
    }
    return spec;
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const Options& opt) {
    VarietyInput vi = read_input(opt.input);
    AffineToricVariety x = build_variety(vi.rays, vi.lattice_rank);
    CoxData cox = cox_data(x);

    ojson rep = make_report("analyze", vi, std::nullopt);
    ojson& res = rep["results"];
    res["lattice_rank"] = x.lattice_rank;
    res["torus_rank"] = x.torus_rank;
    res["rays"] = json_vecs(x.cone.rays);
    res["basis_change"] = json_mat(x.basis_change);
    res["dual_generators"] = json_vecs(x.dual.generators);

    std::vector<Vec> gens = x.hilbert;
    ojson hj = ojson::array();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        ojson g;
        g["name"] = gen_name(i);
        g["exponent"] = json_vec(gens[i]);
        g["cox_monomial"] = cox_monomial(exp_strings(bar_monomial(x, gens[i])), "x");
        hj.push_back(g);
    }
    res["hilbert_basis"] = hj;
    res["torus_units"] = json_vecs(x.torus_units);

    ojson relj = ojson::array();
    for (const BinomialRelation& rel : binomial_relations(gens, opt.degree_bound)) {
        ojson r;
        r["lhs"] = json_vec(rel.lhs);
        r["rhs"] = json_vec(rel.rhs);
        auto side = [&](const std::vector<Int>& exps) {
            std::string s;
            for (std::size_t i = 0; i < exps.size(); ++i) {
                if (exps[i] == 0) continue;
                if (!s.empty()) s += "*";
                s += gen_name(i);
                if (exps[i] != 1) s += "^" + exps[i].get_str();
            }
            return s.empty() ? "1" : s;
        };
        r["text"] = side(rel.lhs) + " = " + side(rel.rhs);
        relj.push_back(r);
    }
    res["relations"] = relj;
    res["relation_degree_bound"] = opt.degree_bound;

    res["class_group"] = ojson::object();
    res["class_group"]["free_rank"] = cox.class_group.free_rank;
    res["class_group"]["torsion"] = json_vec(cox.class_group.torsion);
    res["class_group"]["text"] = cox.class_group.to_string();

    std::ostringstream text;
    text << "variety: " << x.ray_count() << (x.ray_count() == 1 ? " ray" : " rays") << " in rank "
         << x.lattice_rank << " lattice, torus factor rank " << x.torus_rank << "\n";
    text << "rays:";
    for (const Vec& r : x.cone.rays) text << " " << to_string(r);
    text << "\n";
    if (x.basis_change != Mat::identity(x.lattice_rank))
        text << "coordinates adapted by " << x.basis_change.to_string() << "\n";
    text << "dual cone generators:";
    for (const Vec& g : x.dual.generators) text << " " << to_string(g);
    text << "\n";
    text << "hilbert basis of S_X:\n";
    for (std::size_t i = 0; i < gens.size(); ++i)
        text << "  " << gen_name(i) << " = chi^" << to_string(gens[i]) << "  ->  "
             << cox_monomial(exp_strings(bar_monomial(x, gens[i])), "x") << "\n";
    if (!x.torus_units.empty()) {
        text << "torus units:";
        for (const Vec& u : x.torus_units) text << " chi^" << to_string(u);
        text << "\n";
    }
    text << "relations (degree <= " << opt.degree_bound << "):";
    if (relj.empty()) text << " none";
    for (const auto& r : relj) text << " " << r["text"].get<std::string>();
    text << "\n";
    text << "class group: " << cox.class_group.to_string() << "\n";
    text << "H_X action: " << class_group_action(cox) << "\n";

    emit(rep, opt, text.str());
    return 0;
}

// ---------------------------------------------------------------- roots

int cmd_roots(const Options& opt) {
    VarietyInput vi = read_input(opt.input);
    AffineToricVariety x = build_variety(vi.rays, vi.lattice_rank);
    ojson rep = make_report("roots", vi, std::nullopt);
    ojson& res = rep["results"];
    res["bound"] = opt.bound;

    std::ostringstream text;
    if (x.ray_count() == 0) {
        res["ray"] = nullptr;
        res["roots"] = ojson::array();
        res["note"] = "the torus has no rays and no Demazure roots";
        text << "no rays: the torus has no Demazure roots\n";
        emit(rep, opt, text.str());
        return 0;
    }
    if (opt.ray <= 0 || static_cast<std::size_t>(opt.ray) > x.ray_count())
        throw std::invalid_argument("--ray must be between 1 and " + std::to_string(x.ray_count()));
    std::size_t i = static_cast<std::size_t>(opt.ray - 1);
    std::vector<DemazureRoot> roots = enumerate_roots(x, i, opt.bound);
    res["ray"] = opt.ray;
    ojson rj = ojson::array();
    for (const DemazureRoot& r : roots) rj.push_back(json_vec(r.e));
    res["roots"] = rj;

    text << "Demazure roots at ray " << opt.ray << " = " << to_string(x.cone.rays[i])
         << " with height bound " << opt.bound << ":\n";
    for (const DemazureRoot& r : roots) text << "  " << to_string(r.e) << "\n";
    if (roots.empty()) text << "  (none within the bound)\n";
    emit(rep, opt, text.str());
    return 0;
}

// ---------------------------------------------------------------- comul

int cmd_comul(const Options& opt) {
    VarietyInput vi = read_input(opt.input);
    AffineToricVariety x = build_variety(vi.rays, vi.lattice_rank);
    StructureSpec spec = resolve_structure(x, opt);

    std::vector<Vec> targets;
    if (!opt.u.empty())
        targets.push_back(parse_vec(opt.u));
    else
        targets = x.weight_generators();

    ojson rep = make_report("comul", vi, std::nullopt);
    ojson& res = rep["results"];
    res["structure"] = opt.structure.empty() ? (opt.root.empty() ? "toric" : "corank1")
                                             : opt.structure;
    if (spec.kind == MonoidKind::corank1) {
        res["ray"] = static_cast<long>(spec.ray_index + 1);
        res["root"] = to_string(spec.root);
        ojson cj = ojson::array();
        for (const std::string& c : symbolic_root_constraints(x, spec.ray_index, spec.root))
            cj.push_back(c);
        res["constraints"] = cj;
    }

    std::ostringstream text;
    text << "comultiplication (" << res["structure"].get<std::string>();
    if (spec.kind == MonoidKind::corank1)
        text << ", ray " << spec.ray_index + 1 << ", e = " << to_string(spec.root);
    text << ")\n";

    ojson table = ojson::array();
    for (const Vec& u : targets) {
        ojson entry;
        entry["u"] = json_vec(u);
        ojson terms = ojson::array();
        std::string rendered;
        if (spec.symbolic) {
            SymTensorElement phi = comultiply_symbolic(x, spec.ray_index, spec.root, u);
            for (const auto& [key, c] : phi.terms()) {
                ojson t;
                t["coeff"] = rat_str(c);
                t["a"] = to_string(key.first);
                t["b"] = to_string(key.second);
                terms.push_back(t);
            }
            rendered = phi.to_string();
        } else {
            MonoidStructure s{spec.kind, x, std::nullopt};
            if (spec.kind == MonoidKind::corank1)
                s = make_corank1(x, DemazureRoot{spec.ray_index, to_vec(spec.root)});
            else if (spec.kind == MonoidKind::additive)
                s = make_additive(x);
            TensorElement phi = comultiply(s, u);
            for (const auto& [key, c] : phi.terms()) {
                ojson t;
                t["coeff"] = rat_str(c);
                t["a"] = json_vec(key.first);
                t["b"] = json_vec(key.second);
                terms.push_back(t);
            }
            rendered = phi.to_string();
        }
        entry["terms"] = terms;
        entry["text"] = rendered;
        table.push_back(entry);
        text << "  Phi(chi^" << to_string(u) << ") = " << rendered << "\n";
    }
    res["table"] = table;
    emit(rep, opt, text.str());
    return 0;
}

// ---------------------------------------------------------------- cox

int cmd_cox(const Options& opt) {
    VarietyInput vi = read_input(opt.input);
    AffineToricVariety x = build_variety(vi.rays, vi.lattice_rank);
    CoxData cox = cox_data(x);

    ojson rep = make_report("cox", vi, std::nullopt);
    ojson& res = rep["results"];
    res["coordinates"] = cox.total_coordinates();
    res["torus_rank"] = cox.torus_rank;
    res["class_group"] = ojson::object();
    res["class_group"]["free_rank"] = cox.class_group.free_rank;
    res["class_group"]["torsion"] = json_vec(cox.class_group.torsion);
    res["class_group"]["text"] = cox.class_group.to_string();
    ojson dj = ojson::array();
    for (const auto& d : cox.degrees) dj.push_back(json_vec(d));
    res["degrees"] = dj;
    res["action"] = class_group_action(cox);
    ojson bt = ojson::array();
    for (std::size_t i = 0; i < x.hilbert.size(); ++i) {
        ojson row;
        row["name"] = gen_name(i);
        row["exponent"] = json_vec(x.hilbert[i]);
        Vec bar = bar_monomial(x, x.hilbert[i]);
        row["bar"] = json_vec(bar);
        row["cox_monomial"] = cox_monomial(exp_strings(bar), "x");
        bt.push_back(row);
    }
    res["bar_table"] = bt;

    std::ostringstream text;
    text << "total coordinate space: A^" << cox.m;
    if (cox.torus_rank > 0) text << " x (K^x)^" << cox.torus_rank;
    text << "\n";
    text << "class group: " << cox.class_group.to_string() << "\n";
    text << "H_X action: " << class_group_action(cox) << "\n";
    text << "bar map on the Hilbert basis:\n";
    for (std::size_t i = 0; i < x.hilbert.size(); ++i) {
        Vec bar = bar_monomial(x, x.hilbert[i]);
        text << "  " << gen_name(i) << " = chi^" << to_string(x.hilbert[i]) << "  ->  "
             << cox_monomial(exp_strings(bar), "x") << "\n";
    }

    if (!opt.root.empty() || opt.structure == "toric" || opt.structure == "additive") {
        StructureSpec spec = resolve_structure(x, opt);
        std::string formula;
        if (spec.kind == MonoidKind::toric) {
            std::string f = "(";
            for (std::size_t j = 0; j < cox.total_coordinates(); ++j)
                f += (j ? ", " : "") + ("x" + std::to_string(j + 1)) + "*y" + std::to_string(j + 1);
            formula = f + ")";
            res["structure"] = "toric";
        } else if (spec.kind == MonoidKind::additive) {
            std::string f = "(";
            for (std::size_t j = 0; j < cox.total_coordinates(); ++j)
                f += (j ? ", " : "") + ("x" + std::to_string(j + 1)) + " + y" + std::to_string(j + 1);
            formula = f + ")";
            res["structure"] = "additive";
        } else {
            res["structure"] = "corank1";
            res["ray"] = static_cast<long>(spec.ray_index + 1);
            res["root"] = to_string(spec.root);
            LinVec ebar = bar_symbolic(x, spec.root);
            res["lifted_root"] = to_string(ebar);
            formula = cox_product_formula(cox.total_coordinates(), spec.ray_index, ebar);
            text << "root e = " << to_string(spec.root) << " at ray " << spec.ray_index + 1
                 << ", lifted root e-bar = " << to_string(ebar) << "\n";
        }
        res["product_formula"] = formula;
        text << "lifted product: x * y = " << formula << "\n";
    }
    emit(rep, opt, text.str());
    return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Options& opt) {
    VarietyInput vi = read_input(opt.input);
    AffineToricVariety x = build_variety(vi.rays, vi.lattice_rank);
    StructureSpec spec = resolve_structure(x, opt);
    if (spec.symbolic)
        throw std::invalid_argument("verify needs a numeric root; substitute the parameter first");

    MonoidStructure s = make_toric(x);
    if (spec.kind == MonoidKind::corank1)
        s = make_corank1(x, DemazureRoot{spec.ray_index, to_vec(spec.root)});
    else if (spec.kind == MonoidKind::additive)
        s = make_additive(x);

    std::vector<Vec> gens = x.weight_generators();
    bool coassoc = true, cocomm = true;
    for (const Vec& u : gens) {
        coassoc = coassoc && coassociativity_check(s, u);
        cocomm = cocomm && cocommutativity_check(s, u);
    }
    bool counit = counit_check(s);
    bool homomorphism = true;
    for (const Vec& u : gens)
        for (const Vec& v : gens)
            homomorphism = homomorphism && comultiply(s, vec_add(u, v)) ==
                                               tensor_multiply(comultiply(s, u), comultiply(s, v));
    LiftedMonoid lm = make_lifted(s);
    bool coherent = coherence_check(lm, opt.samples, opt.seed);
    bool invariants = invariant_monomial_check(x);
    bool all = coassoc && cocomm && counit && homomorphism && coherent && invariants;

    ojson rep = make_report("verify", vi, opt.seed);
    ojson& res = rep["results"];
    res["structure"] = s.describe();
    res["samples"] = opt.samples;
    ojson checks;
    checks["coassociativity"] = coassoc;
    checks["cocommutativity"] = cocomm;
    checks["counit"] = counit;
    checks["homomorphism"] = homomorphism;
    checks["coherence"] = coherent;
    checks["invariant_monomials"] = invariants;
    rep["verification"] = checks;
    res["all_passed"] = all;

    std::ostringstream text;
    text << "verify " << s.describe() << " (samples = " << opt.samples << ", seed = " << opt.seed
         << ")\n";
    for (const auto& [name, ok] : checks.items())
        text << "  " << (ok.get<bool>() ? "pass" : "FAIL") << "  " << name << "\n";
    emit(rep, opt, text.str());
    return all ? 0 : 2;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const Options& opt) {
    VarietyInput vi = read_input(opt.input);
    ClassificationReport cls = classify_surface(vi.rays, opt.count);
    const AffineToricVariety& x = cls.variety;
    CoxData cox = cox_data(x);

    ojson rep = make_report("classify", vi, std::nullopt);
    ojson& res = rep["results"];
    res["root_count"] = opt.count;
    if (cls.normal_form) {
        res["normal_form"] = ojson::object();
        res["normal_form"]["d"] = json_int(cls.normal_form->d);
        res["normal_form"]["k"] = json_int(cls.normal_form->k);
        res["tau_integral"] = *cls.tau_integral;
    } else {
        res["normal_form"] = nullptr;
        res["tau_integral"] = nullptr;
    }

    std::ostringstream text;
    text << "classification of monoid structures (" << x.ray_count()
         << (x.ray_count() == 1 ? " ray" : " rays");
    if (cls.normal_form)
        text << ", normal form (d,k) = (" << cls.normal_form->d << "," << cls.normal_form->k << ")";
    text << ")\n";
    text << "rank 2: 1 class (toric), chi^u -> chi^u (x) chi^u\n";

    ojson rank1 = ojson::array();
    for (const DemazureRoot& r : cls.rank1_reps) {
        ojson entry;
        entry["ray"] = static_cast<long>(r.ray_index + 1);
        entry["root"] = json_vec(r.e);
        LiftedMonoid lm = make_lifted(make_corank1(x, r));
        LinVec ebar_sym;
        for (const Int& v : *lm.lifted_root) ebar_sym.push_back(LinExpr(v));
        entry["cox_product"] =
            cox_product_formula(cox.total_coordinates(), r.ray_index, ebar_sym);
        ojson table = ojson::array();
        MonoidStructure s = make_corank1(x, r);
        for (std::size_t i = 0; i < x.hilbert.size(); ++i) {
            ojson row;
            row["name"] = gen_name(i);
            row["u"] = json_vec(x.hilbert[i]);
            row["text"] = comultiply(s, x.hilbert[i]).to_string();
            table.push_back(row);
        }
        entry["comultiplication"] = table;
        rank1.push_back(entry);
    }
    res["rank1_classes"] = rank1;
    res["rank1_series_complete"] = cls.rank1_series_complete;

    text << "rank 1: ";
    if (cls.rank1_reps.empty()) {
        text << "none\n";
    } else if (cls.rank1_series_complete) {
        text << "1 class (all roots give isomorphic structures)\n";
    } else if (cls.tau_integral && *cls.tau_integral) {
        text << "one infinite series; first " << cls.rank1_reps.size() << " representatives\n";
    } else {
        text << "two infinite series; first " << cls.rank1_reps.size()
             << " representatives in total\n";
    }
    for (const DemazureRoot& r : cls.rank1_reps) {
        LiftedMonoid lm = make_lifted(make_corank1(x, r));
        LinVec ebar_sym;
        for (const Int& v : *lm.lifted_root) ebar_sym.push_back(LinExpr(v));
        text << "  e = " << to_string(r.e) << " at ray " << r.ray_index + 1 << ", x * y = "
             << cox_product_formula(cox.total_coordinates(), r.ray_index, ebar_sym) << "\n";
        MonoidStructure s = make_corank1(x, r);
        for (std::size_t i = 0; i < x.hilbert.size(); ++i)
            text << "    Phi(" << gen_name(i) << ") = " << comultiply(s, x.hilbert[i]).to_string()
                 << "\n";
    }

    ojson pairs = ojson::array();
    for (const auto& [e1, e2] : cls.iso_pairs) {
        ojson p;
        p["first"] = json_vec(e1.e);
        p["first_ray"] = static_cast<long>(e1.ray_index + 1);
        p["second"] = json_vec(e2.e);
        p["second_ray"] = static_cast<long>(e2.ray_index + 1);
        pairs.push_back(p);
        text << "  isomorphic pair: " << to_string(e1.e) << " (ray " << e1.ray_index + 1 << ") ~ "
             << to_string(e2.e) << " (ray " << e2.ray_index + 1 << ")\n";
    }
    res["iso_pairs"] = pairs;

    res["rank0_class"] = cls.has_additive;
    text << "rank 0: " << (cls.has_additive ? "1 class (vector addition on A^2)" : "none") << "\n";

    emit(rep, opt, text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"affine toric varieties: Demazure roots, commutative monoid structures, Cox lifts"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", opt.input, "input JSON file ('-' for stdin)");
        sub->add_option("--format", opt.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Hilbert basis, relations, class group");
    add_common(analyze);
    analyze->add_option("--bound", opt.degree_bound, "degree bound for binomial relations");

    CLI::App* roots = app.add_subcommand("roots", "enumerate Demazure roots at a ray");
    add_common(roots);
    roots->add_option("--ray", opt.ray, "ray index, 1-based");
    roots->add_option("--bound", opt.bound, "height bound on root coordinates");

    CLI::App* comul = app.add_subcommand("comul", "comultiplication tables");
    add_common(comul);
    comul->add_option("--structure", opt.structure, "toric, corank1 or additive");
    comul->add_option("--ray", opt.ray, "ray index for corank1, 1-based");
    comul->add_option("--root", opt.root, "Demazure root, e.g. 'l,-1' (parameters allowed)");
    comul->add_option("--u", opt.u, "single exponent to expand instead of the whole table");

    CLI::App* cox = app.add_subcommand("cox", "Cox data and lifted products");
    add_common(cox);
    cox->add_option("--structure", opt.structure, "toric, corank1 or additive");
    cox->add_option("--ray", opt.ray, "ray index for corank1, 1-based");
    cox->add_option("--root", opt.root, "Demazure root (parameters allowed)");

    CLI::App* verify = app.add_subcommand("verify", "run the bialgebra and coherence checks");
    add_common(verify);
    verify->add_option("--structure", opt.structure, "toric, corank1 or additive");
    verify->add_option("--ray", opt.ray, "ray index for corank1, 1-based");
    verify->add_option("--root", opt.root, "Demazure root (numeric)");
    verify->add_option("--samples", opt.samples, "number of sampled point pairs");
    verify->add_option("--seed", opt.seed, "seed for the sampled points");

    CLI::App* classify = app.add_subcommand("classify", "classify monoid structures on a surface");
    add_common(classify);
    classify->add_option("--count", opt.count, "how many series representatives to list");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(opt);
        if (app.got_subcommand(roots)) return cmd_roots(opt);
        if (app.got_subcommand(comul)) return cmd_comul(opt);
        if (app.got_subcommand(cox)) return cmd_cox(opt);
        if (app.got_subcommand(verify)) return cmd_verify(opt);
        if (app.got_subcommand(classify)) return cmd_classify(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
