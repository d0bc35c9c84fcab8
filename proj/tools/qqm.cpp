// Command-line front end: every library query behind one binary.
//
// Exit codes: 0 success, 1 domain/parse/precision errors (message on
// stderr), 2 usage errors.  Output is deterministic; JSON keys are emitted
// in sorted order.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qqm/field_lattice.hpp"
#include "qqm/jsonio.hpp"
#include "qqm/parse.hpp"
#include "qqm/powerseries.hpp"

namespace {

using qqm::Json;

struct Options {
    std::size_t n = 1;
    std::optional<std::size_t> j;  // defaults to n (A = B)
    bool char2 = false;
    std::int64_t prec = 16;
    std::string format = "json";
};

std::size_t subgroup_of(const Options& o) { return o.j.value_or(o.n); }

// Inline text, or the contents of a file when prefixed with '@'.
std::string inline_or_file(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw qqm::domain_error("cannot read file: " + arg.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<qqm::Series> parse_gens(const std::string& list, const Options& o) {
    std::vector<qqm::Series> gens;
    std::stringstream ss(inline_or_file(list));
    std::string item;
    while (std::getline(ss, item, ';'))
        if (item.find_first_not_of(" \t") != std::string::npos)
            gens.push_back(qqm::parse_series(item, o.n, o.char2));
    return gens;
}

qqm::QQModule module_arg(const std::string& gens, const std::string& mod,
                         const Options& o) {
    if (!gens.empty())
        return qqm::QQModule::from_generators(
            o.n, qqm::ConvexSubgroup(subgroup_of(o)), parse_gens(gens, o));
    if (!mod.empty())
        return qqm::module_from(Json::parse(inline_or_file(mod)));
    throw CLI::ValidationError("a module needs --gens or --module");
}

qqm::Char2Module c2_module_arg(const std::string& mod) {
    return qqm::c2_module_from(Json::parse(inline_or_file(mod)));
}

// "table" flattens the JSON object to stable key: value lines.
void emit(const Json& out, const Options& o) {
    if (o.format == "table") {
        for (const auto& [key, value] : out.items())
            std::cout << key << ": " << value.dump() << "\n";
        return;
    }
    std::cout << out.dump(2) << "\n";
}

std::string mono_text(const qqm::MonoDescriptor& d) {
    return qqm::format_series(
        qqm::Series::monomial(1, d.sign, qqm::GroupElem{d.exponent}));
}

Json lcr_json(const qqm::LCRTriple& t) {
    return Json{{"left", mono_text(t.q_l)},
                {"center", mono_text(t.q_c)},
                {"right", mono_text(t.q_r)}};
}

int run(int argc, char** argv) {
    CLI::App app{"quasi-quadratic module calculator for iterated Laurent series"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--n", o.n, "number of variables")->capture_default_str();
    app.add_option("--j", o.j, "convex subgroup index (default: n, i.e. A = B)");
    app.add_flag("--char2", o.char2, "characteristic-2 coefficient model");
    app.add_option("--prec", o.prec, "working precision steps")
        ->capture_default_str();
    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "dot", "table"}))
        ->capture_default_str();

    std::string expr, x_expr, gens, gens_b, mod_a, mod_b;
    std::string cls_case = "a", cls_sign = "+";
    std::int64_t cls_n = 0, cls_m = 0;
    std::string cut_text;

    CLI::App* val = app.add_subcommand("val", "valuation of a series");
    val->add_option("expr", expr)->required();

    CLI::App* an = app.add_subcommand("an", "leading angular component");
    an->add_option("expr", expr)->required();

    CLI::App* sqrt_cmd =
        app.add_subcommand("sqrt", "square root of a strict unit");
    sqrt_cmd->add_option("expr", expr)->required();

    CLI::App* member = app.add_subcommand("member", "module membership");
    member->add_option("--gens", gens, "semicolon-separated generators");
    member->add_option("--module", mod_a, "module JSON (or @file)");
    member->add_option("--x", x_expr)->required();

    CLI::App* sum_cmd = app.add_subcommand("sum", "sum of two modules");
    CLI::App* inter_cmd =
        app.add_subcommand("intersect", "intersection of two modules");
    for (CLI::App* c : {sum_cmd, inter_cmd}) {
        c->add_option("--a", mod_a, "first module JSON (or @file)")->required();
        c->add_option("--b", mod_b, "second module JSON (or @file)")->required();
    }

    CLI::App* supp = app.add_subcommand("supp", "support ideal of a module");
    supp->add_option("--gens", gens)->required();

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify a quadratic module of F[[X]]");
    classify_cmd->add_option("--gens", gens)->required();

    CLI::App* present = app.add_subcommand(
        "present", "two-generator presentation of a classification row");
    present->add_option("--case", cls_case)->required();
    present->add_option("--threshold", cls_n, "threshold exponent n");
    present->add_option("--onset", cls_m, "odd onset exponent m (case e)");
    present->add_option("--sign", cls_sign)->check(CLI::IsMember({"+", "-"}));

    CLI::App* lcr = app.add_subcommand(
        "lcr", "left/center/right decomposition of a module of F[[X]]");
    lcr->add_option("--gens", gens)->required();

    CLI::App* lattice =
        app.add_subcommand("lattice", "monogenic module lattice of K");

    CLI::App* c2dec = app.add_subcommand(
        "char2-decompose", "sum-of-two-squares decomposition (char 2)");
    c2dec->add_option("--x", x_expr)->required();

    CLI::App* c2mem =
        app.add_subcommand("char2-member", "char-2 module membership");
    c2mem->add_option("--module", mod_a)->required();
    c2mem->add_option("--x", x_expr)->required();

    CLI::App* c2cls =
        app.add_subcommand("char2-classify", "classify a generated char-2 module");
    c2cls->add_option("--gens", gens)->required();

    CLI::App* c2sum = app.add_subcommand("char2-sum", "sum of char-2 modules");
    CLI::App* c2int =
        app.add_subcommand("char2-intersect", "intersection of char-2 modules");
    for (CLI::App* c : {c2sum, c2int}) {
        c->add_option("--a", mod_a)->required();
        c->add_option("--b", mod_b)->required();
    }

    CLI::App* c2val =
        app.add_subcommand("char2-validate", "well-behavedness of a cut");
    c2val->add_option("--cut", cut_text)->required();

    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    const qqm::ConvexSubgroup H(subgroup_of(o));

    if (val->parsed()) {
        qqm::Series s = qqm::parse_series(expr, o.n, o.char2);
        auto v = s.val();
        emit(Json{{"val", v ? qqm::group_json(*v) : Json("infinity")}}, o);
    } else if (an->parsed()) {
        qqm::AngularValue a = qqm::an(qqm::parse_series(expr, o.n, o.char2));
        emit(Json{{"coeff", a.coeff.str()}, {"sign", a.sign}}, o);
    } else if (sqrt_cmd->parsed()) {
        qqm::Series s = qqm::parse_series(expr, o.n, o.char2);
        qqm::Series root =
            o.char2 ? qqm::sqrt_char2(s)
                    : qqm::sqrt_strict_unit(
                          s, qqm::default_prec(qqm::GroupElem::zero(o.n),
                                               o.prec));
        emit(Json{{"root", qqm::series_json(root)}}, o);
    } else if (member->parsed()) {
        qqm::QQModule m = module_arg(gens, mod_a, o);
        bool in = qqm::contains(m, qqm::parse_series(x_expr, o.n, o.char2));
        emit(Json{{"member", in}}, o);
    } else if (sum_cmd->parsed() || inter_cmd->parsed()) {
        qqm::QQModule a = qqm::module_from(Json::parse(inline_or_file(mod_a)));
        qqm::QQModule b = qqm::module_from(Json::parse(inline_or_file(mod_b)));
        qqm::QQModule r =
            sum_cmd->parsed() ? qqm::sum(a, b) : qqm::intersect(a, b);
        emit(qqm::module_json(r), o);
    } else if (supp->parsed()) {
        qqm::IdealDecomposition d =
            qqm::ideal_decompose(o.n, H, parse_gens(gens, o));
        Json bases = Json::array();
        for (const qqm::MixedClass& b : d.bases) {
            Json head = Json::array();
            for (const qqm::Dyadic& c : b.head)
                head.push_back(qqm::dyadic_json(c));
            bases.push_back(
                {{"head", std::move(head)}, {"tail_parity", b.tail_parity}});
        }
        emit(Json{{"head_cut", qqm::cut_json(d.head_cut)},
                  {"bases", std::move(bases)}},
             o);
    } else if (classify_cmd->parsed()) {
        qqm::QQModule m = qqm::QQModule::from_generators(
            1, qqm::ConvexSubgroup(1), parse_gens(gens, o));
        qqm::PSQuadClass cls = qqm::classify(m);
        Json out{{"case", std::string(1, cls.case_tag)}};
        if (cls.n > 0) out["n"] = cls.n;
        if (cls.m > 0) out["m"] = cls.m;
        if (cls.sign != 0) out["sign"] = cls.sign > 0 ? "+" : "-";
        Json pres = Json::array();
        for (const qqm::Series& f : qqm::two_generator_presentation(cls))
            pres.push_back(qqm::format_series(f));
        out["presentation"] = std::move(pres);
        out["lcr"] = lcr_json(qqm::lcr_decompose(m));
        emit(out, o);
    } else if (present->parsed()) {
        qqm::PSQuadClass cls{cls_case.size() == 1 ? cls_case[0] : '?', cls_n,
                             cls_m, cls_sign == "+" ? +1 : -1};
        if (cls.case_tag != 'c' && cls.case_tag != 'e') cls.sign = 0;
        Json pres = Json::array();
        for (const qqm::Series& f : qqm::two_generator_presentation(cls))
            pres.push_back(qqm::format_series(f));
        emit(Json{{"presentation", std::move(pres)}}, o);
    } else if (lcr->parsed()) {
        qqm::QQModule m = qqm::QQModule::from_generators(
            1, qqm::ConvexSubgroup(1), parse_gens(gens, o));
        emit(lcr_json(qqm::lcr_decompose(m)), o);
    } else if (lattice->parsed()) {
        qqm::LatticeGraph g = qqm::monogenic_lattice(o.n);
        if (o.format == "dot") {
            std::cout << qqm::lattice_dot(g);
        } else {
            Json nodes = Json::array();
            for (const qqm::MonogenicNode& node : g.nodes)
                nodes.push_back(qqm::node_label(node));
            Json edges = Json::array();
            for (const auto& [a, b] : g.edges) edges.push_back({a, b});
            emit(Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}},
                 o);
        }
    } else if (c2dec->parsed()) {
        auto [u, v] = qqm::two_square_decompose(
            qqm::parse_series(x_expr, o.n, true));
        emit(Json{{"u", qqm::series_json(u)}, {"v", qqm::series_json(v)}}, o);
    } else if (c2mem->parsed()) {
        qqm::Char2Module m = c2_module_arg(mod_a);
        bool in = qqm::c2_contains(m, qqm::parse_series(x_expr, m.S.n, true));
        emit(Json{{"member", in}}, o);
    } else if (c2cls->parsed()) {
        Options oc = o;
        oc.char2 = true;
        emit(qqm::c2_module_json(qqm::c2_classify(o.n, H, parse_gens(gens, oc))),
             o);
    } else if (c2sum->parsed() || c2int->parsed()) {
        qqm::Char2Module a = c2_module_arg(mod_a);
        qqm::Char2Module b = c2_module_arg(mod_b);
        emit(qqm::c2_module_json(c2sum->parsed() ? qqm::c2_sum(a, b)
                                                 : qqm::c2_intersect(a, b)),
             o);
    } else if (c2val->parsed()) {
        qqm::CutSet S{o.n, H,
                      qqm::cut_from(Json::parse(inline_or_file(cut_text)), o.n)};
        Json out{{"valid", qqm::cut_validate(S)}};
        auto m = qqm::cut_min(S);
        out["min"] = m ? qqm::group_json(*m) : Json();
        emit(out, o);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qqm::precision_error& e) {
        std::cerr << "indeterminate at working precision: " << e.what() << "\n";
        return 1;
    } catch (const qqm::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
