#include <doctest.h>

#include "cdesc/error.hpp"
#include "cdesc/generators.hpp"
#include "cdesc/motive.hpp"
#include "cdesc/scissor.hpp"
#include "oracle.hpp"

using namespace cdesc;

namespace {

Atom elliptic() { return {"E", 1, {{0, 0, 0, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {2, 1, 1, 1}}}; }

AtomRegistry standard_registry(int max_n = 6) {
    AtomRegistry r;
    for (int n = 0; n <= max_n; ++n) r.add(gen::projective_space(n));
    r.add(elliptic());
    return r;
}

RelationSet pn_relations(const AtomRegistry& r, int max_n = 6) {
    std::vector<Relation> rules;
    for (int n = 1; n <= max_n; ++n) {
        std::string rhs = "1";
        for (int i = 1; i <= n; ++i) rhs += i == 1 ? " + L" : " + L^" + std::to_string(i);
        rules.push_back(parse_relation("[P" + std::to_string(n) + "] -> " + rhs));
    }
    return RelationSet(r, rules);
}

std::map<std::string, oracle::LPoly> pn_substitution(int max_n = 6) {
    std::map<std::string, oracle::LPoly> out{{"pt", {{0, 1}}}};
    for (int n = 1; n <= max_n; ++n) out["P" + std::to_string(n)] = oracle::lpoly_projective(n);
    return out;
}

EPoly e_from_oracle(const Atom& a) {
    EPoly out;
    for (auto [pq, c] : oracle::hodge_e(a)) out += EPoly::monomial(pq.first, pq.second, c);
    return out;
}

Presentation atom_p(const std::string& a) {
    Presentation p;
    p.kind = Presentation::Kind::atom;
    p.atom = a;
    return p;
}

Presentation parts_p(Presentation::Kind kind, std::vector<std::string> parts) {
    Presentation p;
    p.kind = kind;
    p.parts = std::move(parts);
    return p;
}

}  // namespace

TEST_CASE("atom validation") {
    CHECK_NOTHROW(elliptic().validate());
    Atom bad_pq{"x", 1, {{0, 0, 0, 1}, {1, 1, 1, 1}, {2, 1, 1, 1}}};
    CHECK_THROWS_AS(bad_pq.validate(), InvariantViolation);
    Atom lopsided{"y", 1, {{0, 0, 0, 1}, {1, 1, 0, 1}, {2, 1, 1, 1}}};
    try {
        lopsided.validate();
        FAIL("expected a violation");
    } catch (const InvariantViolation& e) {
        CHECK(e.invariant() == "poincare-self-duality");
    }
    Atom empty{"z", 0, {}};
    CHECK_THROWS_AS(empty.validate(), InvariantViolation);
    AtomRegistry r;
    r.add(gen::projective_space(1));
    CHECK_THROWS_AS(r.add(gen::projective_space(1)), InvariantViolation);
    CHECK_THROWS_AS(class_of(r, "P7"), UnknownNameError);
}

TEST_CASE("class_of and twist") {
    const auto r = standard_registry();
    CHECK(class_of(r, "pt") == MotiveClass::one());
    CHECK(class_of(r, "P1").to_string() == "[P1]");
    CHECK(class_of(r, "E").to_string() == "[E]");
    CHECK(twist(MotiveClass::one(), 1) == MotiveClass::lefschetz());
    const auto c = class_of(r, "E") - 3 * MotiveClass::lefschetz(2);
    CHECK(twist(twist(c, 1), -1) == c);
    CHECK(twist(MotiveClass(), 5).is_zero());
    CHECK(twist(c + c, 2) == twist(c, 2) + twist(c, 2));
}

TEST_CASE("class text round trip") {
    for (const char* text : {"1 - L", "2L^2 + [P1]L^-1", "0", "L - [E]", "1 + L + L^2"})
        CHECK(parse_class(text).to_string() == text);
    CHECK(parse_class("L - 1") == parse_class("-1 + L"));
    CHECK_THROWS_AS(parse_class("[P1"), ParseError);
}

TEST_CASE("E-polynomial realization") {
    const auto r = standard_registry();
    CHECK(realize_E(r, MotiveClass::one()) == EPoly::monomial(0, 0));
    CHECK(realize_E(r, class_of(r, "P2")) ==
          EPoly::monomial(0, 0) + EPoly::monomial(1, 1) + EPoly::monomial(2, 2));
    CHECK(realize_E(r, class_of(r, "E")).to_string() == realize_E(r, parse_class("[E]")).to_string());
    const EPoly e = realize_E(r, class_of(r, "E"));
    CHECK(e.coefficient(0, 0) == 1);
    CHECK(e.coefficient(1, 0) == -1);
    CHECK(e.coefficient(0, 1) == -1);
    CHECK(e.coefficient(1, 1) == 1);
    CHECK(e.euler_number() == 0);
    for (const auto& name : r.names()) CHECK(realize_E(r, class_of(r, name)) == e_from_oracle(r.at(name)));
}

TEST_CASE("realization is additive and intertwines twist with uv") {
    const auto r = standard_registry();
    gen::Rng rng(17);
    const auto names = r.names();
    auto random_class = [&] {
        MotiveClass c;
        for (int i = 0; i < 4; ++i)
            c += MotiveClass::term(names[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(names.size()) - 1))],
                                   static_cast<int>(gen::uniform(rng, -3, 3)), gen::uniform(rng, -3, 3));
        return c;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_class(), b = random_class();
        CHECK(realize_E(r, a + b) == realize_E(r, a) + realize_E(r, b));
        CHECK(realize_E(r, a - b) == realize_E(r, a) - realize_E(r, b));
        CHECK(realize_E(r, twist(a, 1)) == realize_E(r, a) * EPoly::monomial(1, 1));
        CHECK(realize_E(r, dual(r, a)) == realize_E(r, a).inverted());
        CHECK(dual(r, dual(r, a)) == a);
    }
}

TEST_CASE("duality examples") {
    const auto r = standard_registry();
    CHECK(dual(r, MotiveClass::one()) == MotiveClass::one());
    CHECK(dual(r, MotiveClass::lefschetz()) == MotiveClass::lefschetz(-1));
    CHECK(dual(r, class_of(r, "P1")) == MotiveClass::term("P1", -1));
    CHECK(realize_E(r, dual(r, class_of(r, "P1"))) == EPoly::monomial(-1, -1) + EPoly::monomial(0, 0));
}

TEST_CASE("relations") {
    const auto r = standard_registry();
    const auto rel = pn_relations(r);
    const auto subst = pn_substitution();
    for (int n = 1; n <= 6; ++n) {
        const auto norm = rel.normalize(class_of(r, "P" + std::to_string(n)));
        CHECK(oracle::evaluate(norm, subst) == oracle::lpoly_projective(n));
        CHECK(norm.terms().size() == static_cast<std::size_t>(n + 1));
    }
    CHECK(rel.normalize(class_of(r, "E")) == class_of(r, "E"));

    CHECK_THROWS_AS(parse_relation("[P1] 1 + L"), ParseError);
    CHECK_THROWS_AS(parse_relation("[P1] + 1 -> L"), ParseError);
    auto violation = [&](std::vector<const char*> texts) -> std::string {
        std::vector<Relation> rules;
        for (auto t : texts) rules.push_back(parse_relation(t));
        try {
            RelationSet(r, rules);
        } catch (const InvariantViolation& e) {
            return e.invariant();
        }
        return "";
    };
    CHECK(violation({"[P1] -> 1 + 2L"}) == "relation-realization");
    CHECK(violation({"[P1] -> [P1]"}) == "relation-termination");
    CHECK(violation({"[P1] -> 1 + L", "[P1] -> [P1]"}) != "");
    CHECK(violation({"[P1] -> 1 + L", "[P2] -> 1 + L + L^2"}) == "");
}

TEST_CASE("scissor calculus") {
    const auto r = standard_registry();
    const auto rel = pn_relations(r);
    std::map<std::string, Presentation> entries;
    entries["A1"] = parts_p(Presentation::Kind::minus, {"P1", "pt"});
    for (int n = 2; n <= 6; ++n)
        entries["A" + std::to_string(n)] =
            parts_p(Presentation::Kind::minus, {"P" + std::to_string(n), "P" + std::to_string(n - 1)});
    entries["P2-cells"] = parts_p(Presentation::Kind::unite, {"A2", "A1", "pt"});
    entries["nothing"] = parts_p(Presentation::Kind::unite, {});
    entries["P2-minus-nothing"] = parts_p(Presentation::Kind::minus, {"P2", "nothing"});
    entries["E-atom"] = atom_p("E");
    Presentation line;
    line.kind = Presentation::Kind::given;
    line.cls = MotiveClass::lefschetz();
    entries["line"] = line;
    entries["E-times-line"] = parts_p(Presentation::Kind::bundle, {"E", "line"});
    entries["E-times-E"] = parts_p(Presentation::Kind::bundle, {"E", "E-atom"});
    const VarietyCatalog cat(r, entries);

    for (int n = 1; n <= 6; ++n) {
        const auto name = "A" + std::to_string(n);
        CHECK(chi_c_scissor(r, rel, cat, name, ScissorMode::normalized) == MotiveClass::lefschetz(n));
        const auto formal = chi_c_scissor(r, rel, cat, name, ScissorMode::formal);
        CHECK(oracle::evaluate(formal, pn_substitution()) == oracle::LPoly{{n, 1}});
    }
    CHECK(chi_c_scissor(r, rel, cat, "A1", ScissorMode::formal).to_string() == "-1 + [P1]");
    CHECK(chi_c_scissor(r, rel, cat, "P2-cells", ScissorMode::normalized) == rel.normalize(class_of(r, "P2")));
    CHECK(chi_c_scissor(r, rel, cat, "P2-minus-nothing", ScissorMode::formal) == class_of(r, "P2"));
    CHECK(chi_c_scissor(r, rel, cat, "E-times-line", ScissorMode::formal) == MotiveClass::term("E", 1));
    CHECK_THROWS_AS(chi_c_scissor(r, rel, cat, "E-times-E", ScissorMode::formal), InvariantViolation);

    // additivity: chi_c(X) = chi_c(X - Y) + chi_c(Y)
    for (int n = 2; n <= 6; ++n) {
        const auto an = chi_c_scissor(r, rel, cat, "A" + std::to_string(n), ScissorMode::formal);
        CHECK(an + class_of(r, "P" + std::to_string(n - 1)) == class_of(r, "P" + std::to_string(n)));
    }

    std::map<std::string, Presentation> cyclic;
    cyclic["a"] = parts_p(Presentation::Kind::minus, {"b", "pt"});
    cyclic["b"] = parts_p(Presentation::Kind::unite, {"a"});
    CHECK_THROWS_AS(VarietyCatalog(r, cyclic), InvariantViolation);
    std::map<std::string, Presentation> dangling;
    dangling["a"] = parts_p(Presentation::Kind::minus, {"nowhere", "pt"});
    CHECK_THROWS_AS(VarietyCatalog(r, dangling), UnknownNameError);
}

TEST_CASE("Serre cone") {
    const auto r = standard_registry();
    const auto rel = pn_relations(r);
    const auto pt = serre_cone(r, "pt");
    CHECK(pt.chi_c == MotiveClass::lefschetz());
    CHECK(pt.chi == MotiveClass::one());

    const auto p1 = serre_report(r, rel, "P1");
    CHECK(p1.chi_c == MotiveClass::lefschetz(2));
    CHECK(p1.chi == MotiveClass::one());
    CHECK(p1.classes_differ);
    CHECK(p1.matches_oracle);
    CHECK(p1.euler_numbers_agree);
    CHECK(p1.chi_c_realization.euler_number() == p1.chi_realization.euler_number());

    const auto e = serre_report(r, rel, "E");
    CHECK(e.chi_c == parse_class("1 - [E] + [E]L"));
    // 1 + (1 - u - v + uv) uv - (1 - u - v + uv)
    const EPoly ee = realize_E(r, class_of(r, "E"));
    CHECK(e.chi_c_realization == EPoly::monomial(0, 0) + ee * EPoly::monomial(1, 1) - ee);
    CHECK(e.chi_c_realization.coefficient(2, 1) == -1);
    CHECK(e.matches_oracle);
    CHECK_THROWS_AS(serre_cone(r, "nope"), UnknownNameError);

    // independent oracle 1 + [y](L - 1) under the P^n substitution
    for (int n = 0; n <= 6; ++n) {
        const std::string y = n == 0 ? "pt" : "P" + std::to_string(n);
        const auto s = serre_report(r, rel, y);
        const auto yp = pn_substitution().at(y);
        const auto expected = oracle::lpoly_add({{0, 1}}, oracle::lpoly_mul(yp, {{1, 1}, {0, -1}}));
        CHECK(oracle::evaluate(s.chi_c, pn_substitution()) == expected);
    }
}
