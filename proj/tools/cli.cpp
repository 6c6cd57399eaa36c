#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "bqf/carks.hpp"
#include "bqf/composition.hpp"
#include "bqf/cubes.hpp"
#include "bqf/geometry.hpp"
#include "bqf/jimm.hpp"
#include "bqf/reduction.hpp"

namespace bqf::cli {

namespace {

using json = nlohmann::ordered_json;

// ---- input ----

json load_json(const std::string& arg) {
    std::string text = arg;
    bool inline_json = !arg.empty() && (arg[0] == '{' || arg[0] == '[');
    if (!inline_json) {
        std::ifstream in(arg);
        if (!in) throw DomainError("cannot read '" + arg + "' (expected inline JSON or a file path)");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

Int int_of(const json& v, const std::string& what) {
    if (v.is_number_integer()) return Int(v.dump());
    if (v.is_string()) return parse_int(v.get<std::string>());
    throw DomainError(what + " must be an integer");
}

Form form_of_json(const json& j) {
    if (j.is_object() && j.contains("form")) return form_of_json(j.at("form"));
    if (j.is_array() && j.size() == 3) return Form(int_of(j[0], "a"), int_of(j[1], "b"), int_of(j[2], "c"));
    if (j.is_object() && j.contains("a") && j.contains("b") && j.contains("c"))
        return Form(int_of(j["a"], "a"), int_of(j["b"], "b"), int_of(j["c"], "c"));
    throw DomainError("a form is {\"a\":..,\"b\":..,\"c\":..} or [a,b,c]");
}

Form load_form(const std::string& arg) { return form_of_json(load_json(arg)); }

Cube load_cube(const std::string& arg) {
    json j = load_json(arg);
    if (j.is_object() && j.contains("cube")) j = j["cube"];
    if (!j.is_array() || j.size() != 8) throw DomainError("a cube is {\"cube\":[a,b,c,d,e,f,g,h]}");
    std::array<Int, 8> v;
    for (std::size_t i = 0; i < 8; ++i) v[i] = int_of(j[i], "cube entry");
    return Cube(v);
}

Matrix load_matrix(const std::string& arg) {
    json j = load_json(arg);
    std::vector<Int> e;
    if (j.is_array() && j.size() == 2 && j[0].is_array()) {
        for (const auto& row : j) {
            if (!row.is_array() || row.size() != 2) throw DomainError("a matrix is [[p,q],[r,s]]");
            for (const auto& x : row) e.push_back(int_of(x, "matrix entry"));
        }
    } else if (j.is_array() && j.size() == 4) {
        for (const auto& x : j) e.push_back(int_of(x, "matrix entry"));
    } else {
        throw DomainError("a matrix is [[p,q],[r,s]]");
    }
    return unimodular(e[0], e[1], e[2], e[3]);
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw DomainError("not a rational number: '" + s + "'");
    r.canonicalize();
    return r;
}

// ---- output ----

const Int kJsonSafe = Int(1) << 53;

json jint(const Int& x) {
    if (abs(x) < kJsonSafe) return json(to_int64(x));
    return json(x.get_str());
}

json jints(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(jint(x));
    return a;
}

json jrat(const Rat& r) {
    if (r.get_den() == 1) return jint(r.get_num());
    return json(r.get_str());
}

json jform(const Form& f) { return json::array({jint(f.a), jint(f.b), jint(f.c)}); }

json jforms(const std::vector<Form>& fs) {
    json a = json::array();
    for (const Form& f : fs) a.push_back(jform(f));
    return a;
}

json jmatrix(const Matrix& m) {
    return json::array({json::array({jint(m.p), jint(m.q)}), json::array({jint(m.r), jint(m.s)})});
}

json jslice(const Slice& m) {
    return json::array({json::array({jint(m.p), jint(m.q)}), json::array({jint(m.r), jint(m.s)})});
}

json jcube(const Cube& c) {
    json a = json::array();
    for (const Int& x : c.v) a.push_back(jint(x));
    return a;
}

json jcf(const ContinuedFraction& cf) {
    json j;
    j["head"] = jints(cf.head);
    j["period"] = jints(cf.period);
    return j;
}

json jqi(const QuadraticIrrational& x) {
    json j;
    j["P"] = jint(x.P);
    j["Q"] = jint(x.Q);
    j["D"] = jint(x.D);
    j["approx"] = x.approx();
    return j;
}

std::string factorization(const Int& n) {
    if (n == 0) return "0";
    std::string s = n < 0 ? "-" : "";
    auto fs = factor(n);
    if (fs.empty()) return s + "1";
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) s += "*";
        s += fs[i].first.get_str();
        if (fs[i].second > 1) s += "^" + std::to_string(fs[i].second);
    }
    return s;
}

json jopt(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

void print_plain(const json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            print_plain(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        return;
    }
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

// ---- commands ----

struct Context {
    std::optional<std::uint64_t> budget_limit;
    std::optional<Budget> budget;
    Budget* get() {
        if (budget_limit && !budget) budget.emplace(*budget_limit);
        return budget ? &*budget : nullptr;
    }
};

json cmd_reduce(const std::string& farg, const std::string& mode, const std::string& equiv, bool list) {
    Form f = load_form(farg);
    Int d = f.discriminant();
    if (d == 0 || is_square(d)) throw DomainError("form must have non-zero, non-square discriminant");
    json j;
    j["form"] = jform(f);
    j["discriminant"] = jint(d);
    j["kind"] = kind_name(classify(f));
    j["primitive"] = is_primitive(f);
    ReductionStatus st = reduction_status(f);
    j["status"] = {{"reduced_definite", jopt(st.reduced_definite)},
                   {"g_reduced", jopt(st.g_reduced)},
                   {"z_reduced", jopt(st.z_reduced)},
                   {"semi_reduced", jopt(st.semi_reduced)}};
    std::string m = mode;
    if (m == "auto") m = d < 0 ? "definite" : "gauss";
    if (m == "definite") {
        if (d > 0) throw DomainError("definite reduction needs a negative discriminant");
        bool neg = f.a < 0;
        Reduced r = reduce_definite(neg ? negate(f) : f);
        j["reduced"] = jform(neg ? negate(r.form) : r.form);
        j["witness"] = jmatrix(r.witness);
    } else if (m == "gauss") {
        GaussCycle g = gauss_reduce_indefinite(f);
        j["cycle"] = jforms(g.cycle);
        j["cycle_length"] = g.cycle.size();
        j["witness"] = jmatrix(g.witness);
    } else if (m == "zagier") {
        ZagierResult z = zagier_reduce(f);
        j["entry"] = jform(z.entry);
        j["preperiod"] = jforms(z.preperiod);
        j["cycle"] = jforms(z.cycle);
        j["steps"] = jints(z.steps);
    } else {
        throw DomainError("unknown mode '" + mode + "'");
    }
    j["class"] = jform(class_of(f).representative);
    if (!equiv.empty()) {
        auto w = equivalent(f, load_form(equiv));
        j["equivalent"] = w.has_value();
        j["equivalence_witness"] = w ? jmatrix(*w) : json(nullptr);
    }
    if (list) {
        if (d < 0) throw DomainError("reduced-form lists are for positive discriminants");
        j["g_reduced_forms"] = jforms(g_reduced_forms(d, true));
        j["z_reduced_forms"] = jforms(z_reduced_forms(d));
        j["narrow_class_number"] = jint(narrow_class_number(d));
    }
    return j;
}

json cmd_cf(const std::string& farg, const std::string& sqrt_arg, const std::string& qi_arg, int convergent_terms) {
    QuadraticIrrational x;
    if (!sqrt_arg.empty()) {
        x = QuadraticIrrational(0, 1, parse_int(sqrt_arg));
    } else if (!qi_arg.empty()) {
        json q = load_json(qi_arg);
        if (!q.is_array() || q.size() != 3) throw DomainError("--qi expects [P,Q,D] for (P + sqrt D)/Q");
        x = QuadraticIrrational(int_of(q[0], "P"), int_of(q[1], "Q"), int_of(q[2], "D"));
    } else if (!farg.empty()) {
        x = root_of(load_form(farg));
    } else {
        throw DomainError("cf needs a form, --sqrt D or --qi [P,Q,D]");
    }
    json j;
    j["x"] = jqi(x);
    ContinuedFraction p = cf_plus(x), m = cf_minus(x);
    j["plus"] = jcf(p);
    j["minus"] = jcf(m);
    j["form_with_root"] = jform(form_with_root(x));
    j["value_check"] = value_of(p) == x && value_of(m) == x;
    if (convergent_terms > 0) {
        std::size_t n = static_cast<std::size_t>(convergent_terms);
        j["convergent_plus"] = jrat(convergent(p.terms(n), Flavor::Plus));
        j["convergent_minus"] = jrat(convergent(m.terms(n), Flavor::Minus));
    }
    return j;
}

json cmd_pell(const std::string& darg, const std::string& marg, Context& ctx) {
    Int D = parse_int(darg), m = parse_int(marg);
    PellSolution s = pell(D, m, ctx.get());
    json j;
    j["D"] = jint(D);
    j["m"] = jint(m);
    j["t"] = jint(s.t);
    j["u"] = jint(s.u);
    j["check"] = s.t * s.t - D * s.u * s.u == m * m;
    return j;
}

json cmd_hirzebruch(const std::string& parg, bool narrow) {
    Int p = parse_int(parg);
    HirzebruchReport r = hirzebruch_class_number(p, narrow ? Hypothesis::Narrow : Hypothesis::Ordinary);
    json j;
    j["p"] = jint(p);
    j["h_minus_p"] = jint(r.class_number);
    j["hypothesis"] = narrow ? "narrow" : "ordinary";
    j["period"] = jints(r.period);
    j["period_sum"] = jint(r.sum);
    j["period_length"] = r.period.size();
    j["brute_force"] = jint(definite_class_number(-p));
    j["class_number_4p"] = jint(r.class_number_4p);
    j["narrow_class_number_4p"] = jint(r.narrow_class_number_4p);
    return j;
}

json cmd_compose(const std::string& a1, const std::string& a2) {
    Form f1 = load_form(a1), f2 = load_form(a2);
    ConcordantPair cp = concordant_pair(f1, f2);
    json j;
    j["f1"] = jform(f1);
    j["f2"] = jform(f2);
    j["input_concordant"] = is_concordant(f1, f2);
    j["concordant_pair"] = {{"g1", jform(cp.g1)}, {"g2", jform(cp.g2)}, {"w1", jmatrix(cp.w1)}, {"w2", jmatrix(cp.w2)}};
    Form prod = dirichlet_product(cp.g1, cp.g2);
    j["product"] = jform(prod);
    j["class"] = jform(compose(class_of(f1), class_of(f2)).representative);
    j["unitable"] = is_unitable(f1, f2);
    return j;
}

json cmd_classgroup(const std::string& darg, bool table) {
    Int d = parse_int(darg);
    ClassGroup g = class_group(d);
    json j;
    j["discriminant"] = jint(d);
    j["fundamental"] = is_fundamental_discriminant(d);
    j["order"] = g.order();
    j["identity"] = jform(identity_form(d));
    json els = json::array();
    for (std::size_t i = 0; i < g.order(); ++i) {
        const Form& f = g.elements[i].representative;
        els.push_back({{"form", jform(f)},
                       {"order", g.element_order(static_cast<int>(i))},
                       {"inverse", jform(g.elements[g.inverse[i]].representative)},
                       {"ambiguous", is_ambiguous(f)}});
    }
    j["elements"] = els;
    AxiomReport ax = verify_axioms(g);
    j["axioms"] = {{"closure", ax.closure},         {"identity", ax.identity},
                   {"inverses", ax.inverses},       {"commutative", ax.commutative},
                   {"associative", ax.associative}, {"triples_checked", ax.triples_checked}};
    if (table) j["table"] = g.table;
    return j;
}

json cube_json(const Cube& c) {
    json j;
    j["cube"] = jcube(c);
    CubeForms f = cube_forms(c);
    j["forms"] = {{"ud", jform(f.ud)}, {"lr", jform(f.lr)}, {"fb", jform(f.fb)}};
    j["discriminant"] = jint(f.discriminant);
    j["degenerate"] = f.degenerate;
    bool prim = is_primitive(c);
    j["primitive"] = prim;
    j["triple_product"] = !f.degenerate && prim ? json(triple_product_check(c)) : json(nullptr);
    return j;
}

json cmd_cube_slice(const std::string& arg) {
    Cube c = load_cube(arg);
    json j = cube_json(c);
    Slicing s = slice(c);
    j["slices"] = {{"U", jslice(s.U)}, {"D", jslice(s.D)}, {"L", jslice(s.L)},
                   {"R", jslice(s.R)}, {"F", jslice(s.F)}, {"B", jslice(s.B)}};
    return j;
}

json cmd_cube_from_pair(const std::string& a1, const std::string& a2) {
    Form f1 = load_form(a1), f2 = load_form(a2);
    Cube c = cube_from_pair(f1, f2);
    json j = cube_json(c);
    j["fb_class"] = jform(class_of(cube_forms(c).fb).representative);
    j["inverse_of_product"] = jform(inverse(compose(class_of(f1), class_of(f2))).representative);
    return j;
}

json cmd_cube_act(const std::string& arg, const std::string& ud, const std::string& lr, const std::string& fb) {
    Cube c = load_cube(arg);
    Matrix mu = ud.empty() ? identity() : load_matrix(ud);
    Matrix ml = lr.empty() ? identity() : load_matrix(lr);
    Matrix mf = fb.empty() ? identity() : load_matrix(fb);
    return cube_json(act3(mu, ml, mf, c));
}

json cmd_cube_scan(int bound) {
    BoxScanReport r = scan_triple_product_box(bound);
    json j;
    j["bound"] = bound;
    j["cubes"] = r.cubes;
    j["checked"] = r.checked;
    j["failures"] = r.failures;
    j["first_failure"] = r.first_failure ? jcube(*r.first_failure) : json(nullptr);
    return j;
}

json cmd_cark(const std::string& farg, const std::string& dot, int depth, std::ostream& out, bool& printed) {
    Form f = load_form(farg);
    Cark c = cark_of(f);
    if (dot == "-") {
        out << export_dot(c, depth);
        printed = true;
        return {};
    }
    json j;
    j["form"] = jform(f);
    j["code"] = jints(c.code.runs);
    j["inverse_code"] = jints(inverse_code(c.code).runs);
    j["symmetric"] = is_symmetric(c.code);
    j["ambiguous"] = is_ambiguous(f);
    j["moves"] = c.moves;
    j["river"] = jforms(c.river);
    j["spine"] = jforms(c.spine);
    j["base"] = {{"index", c.base}, {"form", jform(c.spine[c.base])}};
    j["automorph"] = {{"matrix", jmatrix(c.automorph)},
                      {"trace", jint(c.automorph.trace())},
                      {"word", c.automorph.word},
                      {"blocks", format_blocks(c.automorph.word)}};
    if (!dot.empty()) {
        std::ofstream o(dot);
        if (!o) throw DomainError("cannot write '" + dot + "'");
        o << export_dot(c, depth);
        j["dot"] = dot;
    }
    return j;
}

json cmd_represent(const std::string& farg, const std::string& narg, Context& ctx) {
    Form f = load_form(farg);
    Int N = parse_int(narg);
    Representation r = represent(f, N, ctx.get());
    json j;
    j["form"] = jform(f);
    j["N"] = jint(N);
    j["orbits"] = r.solutions.size();
    json sols = json::array();
    for (const auto& [x, y] : r.solutions) sols.push_back(json::array({jint(x), jint(y)}));
    j["solutions"] = sols;
    j["faces_visited"] = r.faces_visited;
    j["monotone"] = r.monotone;
    if (f.discriminant() > 0) {
        Matrix w = aut_generator(f);
        j["automorph"] = jmatrix(w);
    }
    return j;
}

json cmd_jimm(const std::string& farg) {
    Form f = load_form(farg);
    JimmImage im = jimm_class(f);
    json j;
    j["form"] = jform(f);
    j["discriminant"] = jint(f.discriminant());
    j["discriminant_factorization"] = factorization(f.discriminant());
    j["image"] = jform(im.image);
    j["image_discriminant"] = jint(im.image.discriminant());
    j["image_discriminant_factorization"] = factorization(im.image.discriminant());
    j["class"] = jform(im.proper.representative);
    j["extended_class"] = jform(im.extended.representative);
    j["root_cf"] = jcf(cf_plus(root_of(f)));
    j["image_cf"] = jcf(jimm_cf(cf_plus(root_of(f))));
    return j;
}

json jpoint(const GaussianRationalPoint& p) {
    return {{"u", jrat(p.u)}, {"v", jrat(p.v)}, {"alpha", jint(p.alpha())}, {"beta", jint(p.beta())},
            {"gamma", jint(p.gamma())}, {"delta", jint(p.delta())}};
}

json jlocus(const std::optional<Locus>& h) {
    if (!h) return nullptr;
    return {{"kind", kind_name(h->kind)}, {"param", jrat(h->param)}, {"equation", to_string(*h)}};
}

json cmd_penner_point(const std::string& farg) {
    Form f = load_form(farg);
    GaussianRationalPoint p = point_of_form(f);
    json j;
    j["form"] = jform(f);
    j["point"] = jpoint(p);
    j["form_of_point"] = jform(form_of_point(p));
    return j;
}

json cmd_penner_form(const std::string& u, const std::string& v) {
    GaussianRationalPoint p(parse_rat(u), parse_rat(v));
    Form f = form_of_point(p);
    json j;
    j["point"] = jpoint(p);
    j["form"] = jform(f);
    j["discriminant"] = jint(f.discriminant());
    Int b2 = p.beta() * p.beta();
    j["expected_discriminant"] = jint(-4 * b2 * b2 * p.gamma() * p.delta());
    return j;
}

json cmd_penner_locus(const std::string& a1, const std::string& a2) {
    Form f1 = load_form(a1), f2 = load_form(a2);
    json j;
    j["points"] = json::array({jpoint(point_of_form(f1)), jpoint(point_of_form(f2))});
    j["locus"] = jlocus(common_locus(f1, f2));
    j["unitable"] = is_unitable(f1, f2);
    return j;
}

json cmd_penner_product(const std::string& a1, const std::string& a2) {
    ProductPointReport r = product_point_report(load_form(a1), load_form(a2));
    json j;
    j["product"] = jform(r.product);
    j["point"] = jpoint(point_of_form(r.product));
    j["locus"] = jlocus(r.locus);
    j["on_locus"] = r.on_locus;
    j["closest"] = r.closest;
    j["candidates"] = r.candidates;
    j["members_on_locus"] = r.members;
    j["ok"] = r.ok();
    return j;
}

std::optional<std::uint64_t> env_budget() {
    const char* e = std::getenv("BQF_BUDGET");
    if (!e || !*e) return std::nullopt;
    Int v = parse_int(e);
    if (v <= 0 || !fits_int64(v)) throw DomainError("BQF_BUDGET must be a positive integer");
    return static_cast<std::uint64_t>(to_int64(v));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"bqf: binary quadratic forms toolkit", "bqf"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    std::int64_t budget = 0;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "plain"}));
    app.add_option("--budget", budget, "step budget for search loops")->check(CLI::PositiveNumber);

    std::string f1, f2, mode = "auto", equiv, num, num2 = "1", sqrt_arg, qi_arg, dot, ud, lr, fb, u, v;
    bool flag = false;
    int depth = 1, terms = 0, bound = 4;

    auto* reduce = app.add_subcommand("reduce", "reduce a form; definite, Gauss or Zagier");
    reduce->add_option("form", f1, "form JSON or file")->required();
    reduce->add_option("--mode", mode)->check(CLI::IsMember({"auto", "definite", "gauss", "zagier"}));
    reduce->add_option("--equivalent", equiv, "second form to test for equivalence");
    reduce->add_flag("--list", flag, "list G- and Z-reduced forms of the discriminant");

    auto* cf = app.add_subcommand("cf", "plus and minus continued fractions");
    cf->add_option("form", f1, "form whose root is expanded");
    cf->add_option("--sqrt", sqrt_arg, "expand sqrt(D)");
    cf->add_option("--qi", qi_arg, "expand (P + sqrt D)/Q given as [P,Q,D]");
    cf->add_option("--convergent", terms, "convergent of the first n terms");

    auto* pell_cmd = app.add_subcommand("pell", "least solution of t^2 - D u^2 = m^2");
    pell_cmd->add_option("D", num)->required();
    pell_cmd->add_option("--m", num2);

    auto* hirz = app.add_subcommand("hirzebruch", "class number of Q(sqrt -p) from the minus period of sqrt p");
    hirz->add_option("p", num)->required();
    hirz->add_flag("--narrow", flag, "require narrow class number 1 instead");

    auto* comp = app.add_subcommand("compose", "Gauss product of two forms");
    comp->add_option("f1", f1)->required();
    comp->add_option("f2", f2)->required();

    auto* cg = app.add_subcommand("classgroup", "class group of a discriminant");
    cg->add_option("D", num)->required();
    cg->add_flag("--table", flag, "include the multiplication table");

    auto* cube = app.add_subcommand("cube", "Bhargava cubes");
    cube->require_subcommand(1);
    cube->fallthrough();
    auto* cs = cube->add_subcommand("slice", "slices and forms of a cube");
    cs->add_option("cube", f1)->required();
    auto* cp = cube->add_subcommand("from-pair", "cube with prescribed f_UD and f_LR");
    cp->add_option("f1", f1)->required();
    cp->add_option("f2", f2)->required();
    auto* ca = cube->add_subcommand("act", "act by unimodular matrices along each direction");
    ca->add_option("cube", f1)->required();
    ca->add_option("--ud", ud);
    ca->add_option("--lr", lr);
    ca->add_option("--fb", fb);
    auto* cscan = cube->add_subcommand("scan", "triple product over every cube in a box");
    cscan->add_option("--bound", bound)->check(CLI::Range(0, 4));

    auto* cark = app.add_subcommand("cark", "cark, bunch code and automorph of an indefinite form");
    cark->add_option("form", f1)->required();
    cark->add_option("--dot", dot, "write Graphviz output to a file ('-' for stdout)");
    cark->add_option("--depth", depth, "tributary depth for --dot")->check(CLI::NonNegativeNumber);

    auto* rep = app.add_subcommand("represent", "primitive solutions of f(X,Y) = N up to automorphs");
    rep->add_option("form", f1)->required();
    rep->add_option("N", num)->required();

    auto* jimm = app.add_subcommand("jimm", "image of a form under the Jimm map");
    jimm->add_option("form", f1)->required();

    auto* penner = app.add_subcommand("penner", "points of the upper half-plane and forms");
    penner->require_subcommand(1);
    penner->fallthrough();
    auto* pp = penner->add_subcommand("point", "point of a positive definite form");
    pp->add_option("form", f1)->required();
    auto* pf = penner->add_subcommand("form", "form of the point u + v i");
    pf->add_option("--u", u)->required();
    pf->add_option("--v", v)->required();
    auto* pl = penner->add_subcommand("locus", "common locus of two points");
    pl->add_option("f1", f1)->required();
    pl->add_option("f2", f2)->required();
    auto* pr = penner->add_subcommand("product", "closest-point check for a concordant pair");
    pr->add_option("f1", f1)->required();
    pr->add_option("f2", f2)->required();

    // CLI11 wants the arguments reversed; negative numbers stay positional.
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        Context ctx;
        ctx.budget_limit = env_budget();
        if (budget > 0) ctx.budget_limit = static_cast<std::uint64_t>(budget);
        json j;
        bool printed = false;
        if (*reduce) j = cmd_reduce(f1, mode, equiv, flag);
        else if (*cf) j = cmd_cf(f1, sqrt_arg, qi_arg, terms);
        else if (*pell_cmd) j = cmd_pell(num, num2, ctx);
        else if (*hirz) j = cmd_hirzebruch(num, flag);
        else if (*comp) j = cmd_compose(f1, f2);
        else if (*cg) j = cmd_classgroup(num, flag);
        else if (*cs) j = cmd_cube_slice(f1);
        else if (*cp) j = cmd_cube_from_pair(f1, f2);
        else if (*ca) j = cmd_cube_act(f1, ud, lr, fb);
        else if (*cscan) j = cmd_cube_scan(bound);
        else if (*cark) j = cmd_cark(f1, dot, depth, out, printed);
        else if (*rep) j = cmd_represent(f1, num, ctx);
        else if (*jimm) j = cmd_jimm(f1);
        else if (*pp) j = cmd_penner_point(f1);
        else if (*pf) j = cmd_penner_form(u, v);
        else if (*pl) j = cmd_penner_locus(f1, f2);
        else if (*pr) j = cmd_penner_product(f1, f2);
        if (printed) return 0;
        if (format == "plain")
            print_plain(j, "", out);
        else
            out << j.dump(2) << "\n";
        return 0;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotFound& e) {
        err << "not found: " << e.what() << "\n";
        return 3;
    } catch (const BudgetExhausted& e) {
        err << "budget: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace bqf::cli
