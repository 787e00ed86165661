/*
   Copyright 2026 The skewcalc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <optional>
#include <sstream>

#include "skew/extension.hpp"
#include "skew/finite_field.hpp"
#include "skew/fraction_field.hpp"
#include "skew/hadamard.hpp"
#include "skew/parse.hpp"
#include "skew/pdep.hpp"
#include "skew/roots.hpp"
#include "skew/selftest.hpp"
#include "skew/sigma_field.hpp"
#include "skew/tower.hpp"

namespace skewcalc {

using json = nlohmann::ordered_json;
using namespace skew;

namespace {

struct Options {
    std::string field;
    std::string format = "text";
    std::uint64_t seed = 1;
    unsigned jobs = 1;

    std::string poly, other, at, side = "right";
    std::string set, values;
    std::string a, b;
    bool classes = false;
    std::string num, den;
    unsigned tower_bound = 6;
    std::string order = "asc";
    std::size_t precision = 64;
    std::string s, s_num, s_den, t, t_num, t_den;
    std::string coeffs, gens;
    std::string psi_root, psi_field;
    std::size_t cases = 200;
    std::vector<std::string> fields;
};

json strings(const std::vector<Element>& v) {
    json j = json::array();
    for (const auto& e : v) j.push_back(e.to_string());
    return j;
}

json series_json(const TruncatedSeries& s) {
    return {{"valuation", s.valuation}, {"precision", s.end()}, {"coefficients", strings(s.coeffs)},
            {"series", s.to_string()}};
}

json terms_json(const std::vector<SimpleTerm>& terms) {
    json j = json::array();
    for (const auto& t : terms) j.push_back({{"b", t.b.to_string()}, {"c", t.c.to_string()}});
    return j;
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool all_scalars(const json& a) {
    for (const auto& v : a)
        if (v.is_structured()) return false;
    return true;
}

void render(const json& j, std::ostream& out, const std::string& pad);

std::string inline_text(const json& v) {
    if (!v.is_structured()) return scalar_text(v);
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + inline_text(v[i]);
    return s + "]";
}

void render(const json& j, std::ostream& out, const std::string& pad) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        if (!v.is_structured()) {
            out << pad << it.key() << ": " << scalar_text(v) << "\n";
        } else if (v.is_array() && all_scalars(v)) {
            out << pad << it.key() << ":";
            if (v.empty()) out << " (none)";
            for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : " ") << scalar_text(v[i]);
            out << "\n";
        } else if (v.is_array()) {
            out << pad << it.key() << ":\n";
            for (const auto& item : v) {
                if (!item.is_object()) {
                    out << pad << "  - " << inline_text(item) << "\n";
                    continue;
                }
                std::ostringstream sub;
                render(item, sub, "");
                std::istringstream lines(sub.str());
                std::string line;
                bool first = true;
                while (std::getline(lines, line)) {
                    out << pad << (first ? "  - " : "    ") << line << "\n";
                    first = false;
                }
            }
        } else {
            out << pad << it.key() << ":\n";
            render(v, out, pad + "  ");
        }
    }
}

void emit(const json& j, const Options& o, std::ostream& out) {
    if (o.format == "json")
        out << j.dump(2) << "\n";
    else
        render(j, out, "");
}

bool usage_error(ErrorCode c) {
    return c == ErrorCode::SyntaxError || c == ErrorCode::FieldLiteralError || c == ErrorCode::InvalidDescriptor ||
           c == ErrorCode::InvalidArgument;
}

FieldPtr need_field(const Options& o) {
    if (o.field.empty()) throw Error(ErrorCode::InvalidArgument, "--field is required");
    return make_field(o.field);
}

SkewPolynomial need_poly(const FieldPtr& F, const std::string& text, const char* flag) {
    if (text.empty()) throw Error(ErrorCode::InvalidArgument, std::string(flag) + " is required");
    return parse_polynomial(F, text);
}

Element need_element(const FieldPtr& F, const std::string& text, const char* flag) {
    if (text.empty()) throw Error(ErrorCode::InvalidArgument, std::string(flag) + " is required");
    return parse_element(F, text);
}

bool left_side(const Options& o) {
    if (o.side != "left" && o.side != "right") throw Error(ErrorCode::InvalidArgument, "--side is left or right");
    return o.side == "left";
}

PfdOptions pfd_options(const Options& o) {
    PfdOptions p;
    p.tower_bound = o.tower_bound;
    p.seed = o.seed;
    if (o.order == "asc")
        p.order = PfdOptions::RootOrder::Ascending;
    else if (o.order == "desc")
        p.order = PfdOptions::RootOrder::Descending;
    else if (o.order == "shuffle")
        p.order = PfdOptions::RootOrder::Shuffled;
    else
        throw Error(ErrorCode::InvalidArgument, "--order is asc, desc or shuffle");
    return p;
}

OreFraction need_fraction(const FieldPtr& F, const std::string& num, const std::string& den) {
    SkewPolynomial A = need_poly(F, num, "--num");
    SkewPolynomial B = den.empty() ? SkewPolynomial::constant(F->one()) : parse_polynomial(F, den);
    return OreFraction(A, B);
}

// A series operand: a coefficient list or a fraction.
TruncatedSeries series_operand(const FieldPtr& F, const std::string& list, const std::string& num,
                               const std::string& den, std::size_t precision, const char* name) {
    if (!list.empty()) {
        if (!num.empty()) throw Error(ErrorCode::InvalidArgument, std::string("give either --") + name +
                                                                      " or --" + name + "-num");
        return TruncatedSeries{F, 0, parse_element_list(F, list)};
    }
    if (num.empty())
        throw Error(ErrorCode::InvalidArgument, std::string("--") + name + " or --" + name + "-num is required");
    return series_expand(need_fraction(F, num, den), precision);
}

json cmd_eval(const Options& o) {
    FieldPtr F = need_field(o);
    SkewPolynomial P = need_poly(F, o.poly, "--poly");
    Element a = need_element(F, o.at, "--at");
    bool left = left_side(o);
    return {{"command", "eval"},      {"field", F->name()},
            {"polynomial", P.to_string()}, {"point", a.to_string()},
            {"side", o.side},         {"value", (left ? eval_left(P, a) : eval_right(P, a)).to_string()}};
}

json cmd_divmod(const Options& o) {
    FieldPtr F = need_field(o);
    SkewPolynomial P = need_poly(F, o.poly, "--poly"), D = need_poly(F, o.other, "--by");
    DivMod dm = left_side(o) ? left_divmod(P, D) : right_divmod(P, D);
    return {{"command", "divmod"},         {"field", F->name()},
            {"dividend", P.to_string()},   {"divisor", D.to_string()},
            {"side", o.side},              {"quotient", dm.quotient.to_string()},
            {"remainder", dm.remainder.to_string()}};
}

json cmd_gcrd(const Options& o) {
    FieldPtr F = need_field(o);
    SkewPolynomial P = need_poly(F, o.poly, "--poly"), Q = need_poly(F, o.other, "--by");
    bool left = left_side(o);
    Bezout bz = left ? gcld(P, Q) : gcrd(P, Q);
    SkewPolynomial M = left ? lcrm(P, Q) : lclm(P, Q);
    return {{"command", "gcrd"},       {"field", F->name()},     {"side", o.side},
            {"gcd", bz.gcd.to_string()}, {"u", bz.u.to_string()}, {"v", bz.v.to_string()},
            {left ? "lcrm" : "lclm", M.to_string()}};
}

std::vector<Element> need_set(const FieldPtr& F, const Options& o) {
    if (o.set.empty()) throw Error(ErrorCode::InvalidArgument, "--set is required");
    return parse_element_list(F, o.set);
}

json cmd_minpoly(const Options& o) {
    FieldPtr F = need_field(o);
    auto S = need_set(F, o);
    AlgebraicSet alg = minimal_polynomial(F, S);
    std::vector<Element> basis;
    for (auto i : alg.basis) basis.push_back(S[i]);
    return {{"command", "minpoly"},
            {"field", F->name()},
            {"set", strings(S)},
            {"minimal_polynomial", alg.minimal_poly.to_string()},
            {"rank", alg.rank},
            {"p_independent", alg.rank == S.size()},
            {"basis", strings(basis)}};
}

json cmd_interp(const Options& o) {
    FieldPtr F = need_field(o);
    auto S = need_set(F, o);
    auto V = parse_element_list(F, o.values);
    if (V.size() != S.size()) throw Error(ErrorCode::InvalidArgument, "--values must match --set in length");
    SkewPolynomial P = interpolate(F, S, V);
    return {{"command", "interp"}, {"field", F->name()}, {"set", strings(S)}, {"values", strings(V)},
            {"polynomial", P.to_string()}};
}

json cmd_bray_whaples(const Options& o) {
    FieldPtr F = need_field(o);
    auto S = need_set(F, o);
    SkewPolynomial P = bray_whaples(F, S);
    json j = {{"command", "bray-whaples"}, {"field", F->name()}, {"set", strings(S)}, {"polynomial", P.to_string()}};
    if (F->is_finite()) j["roots"] = strings(enumerate_roots(P, o.jobs).roots);
    return j;
}

json cmd_vandermonde_rank(const Options& o) {
    FieldPtr F = need_field(o);
    auto S = need_set(F, o);
    json j = {{"command", "vandermonde-rank"}, {"field", F->name()}, {"set", strings(S)},
              {"rank", vandermonde_rank(S)}};
    bool nonzero = std::none_of(S.begin(), S.end(), [](const Element& e) { return e.is_zero(); });
    if (nonzero) {
        j["hat_set"] = strings(hat_set(S));
        j["hat_left_rank"] = hat_set_left_rank(S);
    }
    return j;
}

json cmd_conjugacy(const Options& o) {
    FieldPtr F = need_field(o);
    json j = {{"command", "conjugacy"}, {"field", F->name()}};
    if (o.classes) {
        json cls = json::array();
        for (const auto& c : sigma_conjugacy_classes(F)) cls.push_back(strings(c));
        j["class_count"] = cls.size();
        j["classes"] = cls;
        return j;
    }
    Element a = need_element(F, o.a, "--a");
    j["a"] = a.to_string();
    j["invariant"] = conjugacy_invariant(a).to_string();
    if (!o.b.empty()) {
        Element b = parse_element(F, o.b);
        j["b"] = b.to_string();
        j["conjugate"] = are_sigma_conjugate(a, b);
    }
    if (F->is_finite()) j["class"] = strings(conjugacy_class(a));
    return j;
}

json cmd_roots(const Options& o) {
    FieldPtr F = need_field(o);
    SkewPolynomial P = need_poly(F, o.poly, "--poly");
    RootReport r = enumerate_roots(P, o.jobs);
    json per = json::array();
    for (const auto& [rep, n] : r.per_class_counts) per.push_back({{"representative", rep.to_string()}, {"roots", n}});
    json j = {{"command", "roots"},
              {"field", F->name()},
              {"polynomial", P.to_string()},
              {"count", r.roots.size()},
              {"roots", strings(r.roots)},
              {"classes_hit", r.classes_hit},
              {"per_class", per}};
    if (!P.is_zero() && P.degree() > Degree(0)) {
        SemilinearKernel k = class_roots_via_kernel(P);
        j["class_of_one"] = {{"kernel_dimension", k.dimension},
                             {"fixed_field_size", k.fixed_field_size},
                             {"predicted", k.predicted_count},
                             {"found", k.class_one_roots.size()}};
    }
    return j;
}

json cmd_closure_count(const Options& o) {
    FieldPtr F = need_field(o);
    SkewPolynomial P = need_poly(F, o.poly, "--poly");
    ClosureCount c = closure_root_count(P);
    return {{"command", "closure-count"},
            {"field", F->name()},
            {"polynomial", P.to_string()},
            {"reduced", frobenius_reduce(P).to_string()},
            {"count", c.count},
            {"formula", c.formula}};
}

json cmd_extension_verify(const Options& o) {
    FieldPtr F = need_field(o);
    SkewPolynomial P = need_poly(F, o.poly, "--poly");
    KPVerification v = verify_root_in_KP(P);
    json j = {{"command", "extension-verify"},
              {"field", F->name()},
              {"polynomial", P.to_string()},
              {"root", v.root},
              {"minimal", v.minimal},
              {"value", v.value},
              {"norms", v.norms},
              {"sigma_P", v.sigma_table}};
    if (!o.psi_root.empty()) {
        FieldPtr L = o.psi_field.empty() ? F : make_field(o.psi_field);
        Element a = parse_element(L, o.psi_root);
        PsiReport r = psi_a_check(P, a, make_embedding(F, L), 50, o.seed);
        j["psi"] = {{"target", L->name()},
                    {"a", a.to_string()},
                    {"samples", r.samples},
                    {"additive", r.additive},
                    {"multiplicative", r.multiplicative},
                    {"intertwines_sigma", r.intertwines},
                    {"denominators_nonzero", r.denominators_nonzero},
                    {"ok", r.ok()}};
    }
    return j;
}

json cmd_pfd(const Options& o) {
    FieldPtr F = need_field(o);
    OreFraction x = need_fraction(F, o.num, o.den);
    if (o.den.empty()) throw Error(ErrorCode::InvalidArgument, "--den is required");
    PfdResult r = pfd(x, pfd_options(o));
    return {{"command", "pfd"},
            {"field", F->name()},
            {"fraction", x.reduced().to_string()},
            {"extension_field", r.field->name()},
            {"extension_degree", r.extension_degree},
            {"polynomial_part", r.polynomial_part.to_string()},
            {"pole_part", strings(r.pole_part)},
            {"terms", terms_json(r.terms)}};
}

json cmd_hadamard_mul(const Options& o) {
    FieldPtr F = need_field(o);
    TruncatedSeries s = series_operand(F, o.s, o.s_num, o.s_den, o.precision, "s");
    TruncatedSeries t = series_operand(F, o.t, o.t_num, o.t_den, o.precision, "t");
    return {{"command", "hadamard mul"}, {"field", F->name()}, {"precision", o.precision},
            {"product", series_json(hadamard_product(s, t))}};
}

json cmd_hadamard_alpha(const Options& o) {
    FieldPtr F = need_field(o);
    auto b = parse_element_list(F, o.coeffs), a = parse_element_list(F, o.gens);
    if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "--coeffs and --gens differ in length");
    NormCombination c;
    for (std::size_t i = 0; i < a.size(); ++i) c.push_back({b[i], a[i]});
    return {{"command", "hadamard alpha"}, {"field", F->name()}, {"precision", o.precision},
            {"terms", terms_json(c)}, {"series", series_json(alpha_map(F, c, o.precision))}};
}

json cmd_hadamard_recover(const Options& o) {
    FieldPtr F = need_field(o);
    OreFraction x = need_fraction(F, o.num, o.den);
    NormRecovery r = recover_norm_combination(x, pfd_options(o));
    return {{"command", "hadamard recover"},
            {"field", F->name()},
            {"extension_field", r.field->name()},
            {"terms", terms_json(r.terms)},
            {"threshold", r.threshold},
            {"verified_to", r.verified_to}};
}

json cmd_selftest(const Options& o, bool& failed) {
    auto fields = o.fields.empty() ? default_selftest_fields() : o.fields;
    auto results = run_selftest(fields, o.cases, o.seed);
    json rows = json::array();
    std::size_t total = 0;
    for (const auto& r : results) {
        total += r.failures;
        json row = {{"field", r.field}, {"property", r.property}, {"cases", r.cases}, {"failures", r.failures}};
        if (!r.first_failure.empty()) row["first_failure"] = r.first_failure;
        rows.push_back(row);
    }
    failed = total > 0;
    return {{"command", "selftest"}, {"seed", o.seed}, {"cases", o.cases}, {"failures", total}, {"results", rows}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Arithmetic in skew polynomial rings K[T; sigma]", "skewcalc"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--field", o.field, "field descriptor: q | qi | qx-inv | gf:p | gf:p^k[:modulus=..][:frob=n]");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", o.seed, "seed for randomized checks");
    app.add_option("--jobs", o.jobs, "worker threads for root enumeration")->check(CLI::Range(1u, 256u));

    std::optional<std::function<json()>> action;
    bool selftest_failed = false;
    auto sub = [&](const std::string& name, const std::string& help, std::function<json()> f) {
        auto* s = app.add_subcommand(name, help);
        s->callback([&action, f] { action = f; });
        return s;
    };

    auto* eval = sub("eval", "evaluate P at a (right or left)", [&] { return cmd_eval(o); });
    eval->add_option("--poly", o.poly)->required();
    eval->add_option("--at", o.at)->required();
    eval->add_option("--side", o.side);

    auto* divmod = sub("divmod", "division with remainder", [&] { return cmd_divmod(o); });
    divmod->add_option("--poly", o.poly)->required();
    divmod->add_option("--by", o.other)->required();
    divmod->add_option("--side", o.side, "right: P = Q D + R, left: P = D Q + R");

    auto* gcd = sub("gcrd", "greatest common right divisor and Bezout cofactors", [&] { return cmd_gcrd(o); });
    gcd->add_option("--poly", o.poly)->required();
    gcd->add_option("--by", o.other)->required();
    gcd->add_option("--side", o.side, "left switches to gcld and lcrm");

    auto* mp = sub("minpoly", "minimal polynomial of a finite set", [&] { return cmd_minpoly(o); });
    mp->add_option("--set", o.set)->required();

    auto* ip = sub("interp", "interpolating polynomial", [&] { return cmd_interp(o); });
    ip->add_option("--set", o.set)->required();
    ip->add_option("--values", o.values)->required();

    auto* bw = sub("bray-whaples", "polynomial with prescribed non-conjugate roots", [&] { return cmd_bray_whaples(o); });
    bw->add_option("--set", o.set)->required();

    auto* vr = sub("vandermonde-rank", "rank of the sigma-Vandermonde matrix", [&] { return cmd_vandermonde_rank(o); });
    vr->add_option("--set", o.set)->required();

    auto* cj = sub("conjugacy", "sigma-conjugacy test and classes", [&] { return cmd_conjugacy(o); });
    cj->add_option("--a", o.a);
    cj->add_option("--b", o.b);
    cj->add_flag("--classes", o.classes, "list all classes of a finite field");

    auto* rt = sub("roots", "enumerate right roots over a finite field", [&] { return cmd_roots(o); });
    rt->add_option("--poly", o.poly)->required();

    auto* cc = sub("closure-count", "number of roots over the algebraic closure", [&] { return cmd_closure_count(o); });
    cc->add_option("--poly", o.poly)->required();

    auto* ev = sub("extension-verify", "check the universal root of K[P]", [&] { return cmd_extension_verify(o); });
    ev->add_option("--poly", o.poly)->required();
    ev->add_option("--psi-root", o.psi_root, "also check psi_a for this root a");
    ev->add_option("--psi-field", o.psi_field, "field containing the psi root");

    auto* pf = sub("pfd", "partial fraction decomposition of A B^-1", [&] { return cmd_pfd(o); });
    pf->add_option("--num", o.num)->required();
    pf->add_option("--den", o.den)->required();
    pf->add_option("--tower-bound", o.tower_bound, "largest extension degree searched for roots");
    pf->add_option("--order", o.order, "root order: asc, desc or shuffle");

    auto* hd = app.add_subcommand("hadamard", "twisted Hadamard algebra");
    hd->require_subcommand(1);
    auto add_h = [&](const std::string& name, const std::string& help, std::function<json()> f) {
        auto* s = hd->add_subcommand(name, help);
        s->callback([&action, f] { action = f; });
        s->add_option("--precision", o.precision)->check(CLI::PositiveNumber);
        return s;
    };
    auto* hm = add_h("mul", "coefficientwise product of two series", [&] { return cmd_hadamard_mul(o); });
    hm->add_option("--s", o.s, "coefficient list");
    hm->add_option("--s-num", o.s_num);
    hm->add_option("--s-den", o.s_den);
    hm->add_option("--t", o.t, "coefficient list");
    hm->add_option("--t-num", o.t_num);
    hm->add_option("--t-den", o.t_den);
    auto* ha = add_h("alpha", "series of sum b_j (1 - a_j T)^-1", [&] { return cmd_hadamard_alpha(o); });
    ha->add_option("--coeffs", o.coeffs, "b_1,...,b_n")->required();
    ha->add_option("--gens", o.gens, "a_1,...,a_n")->required();
    auto* hr = add_h("recover", "eventual norm combination of a fraction", [&] { return cmd_hadamard_recover(o); });
    hr->add_option("--num", o.num)->required();
    hr->add_option("--den", o.den)->required();
    hr->add_option("--tower-bound", o.tower_bound);

    auto* st = sub("selftest", "randomized identity sweep", [&] { return cmd_selftest(o, selftest_failed); });
    st->add_option("--cases", o.cases, "cases per property and field");
    st->add_option("--sweep-field", o.fields, "restrict to these fields (repeatable)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }
    if (!action) {
        err << "no subcommand given\n";
        return 2;
    }

    try {
        json result = (*action)();
        emit(result, o, out);
        return selftest_failed ? 1 : 0;
    } catch (const Error& e) {
        json j = {{"error", {{"code", std::string(code_name(e.code()))}, {"message", e.what()}}}};
        if (e.has_position()) j["error"]["position"] = e.position();
        if (o.format == "json") out << j.dump(2) << "\n";
        err << "error[" << code_name(e.code()) << "]: " << e.what() << "\n";
        return usage_error(e.code()) ? 2 : 1;
    }
}

}  // namespace skewcalc
