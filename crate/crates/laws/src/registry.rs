//! The law registry.
//!
//! Ids keep a stable scheme: `L`, `P` and `C` prefixes for lemmas,
//! propositions and corollaries with their result number, `R-` for
//! background relation algebra, `A-` for the basis definitions, `NEG-` for
//! non-theorems with a stored witness and `REG-` for pinned regressions.
//! Carriers default to size 2.

use std::sync::OnceLock;

use multirel::Class::{self, *};

use crate::law::{law, Law, LawKind, Verdict};

const T: LawKind = LawKind::Theorem;
const N: LawKind = LawKind::NonTheorem;
const PASS: LawKind = LawKind::Regression(Verdict::Pass);
const FAIL: LawKind = LawKind::Regression(Verdict::Fail);

pub fn registry() -> &'static [Law] {
    static REGISTRY: OnceLock<Vec<Law>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

fn build() -> Vec<Law> {
    let mut laws = Vec::new();
    laws.extend(relational());
    laws.extend(power());
    laws.extend(extension());
    laws.extend(peleg());
    laws.extend(deterministic());
    laws.extend(galois());
    laws.extend(fusion());
    laws.extend(inner_univalent());
    laws.extend(fixpoints());
    laws.extend(total());
    laws.extend(representations());
    laws.extend(basis());
    laws
}

/// `claim` over `R, S, T : X ↔ P X`, each in `class`.
fn assoc(id: &str, class: Class) -> Law {
    law(id, T, "(R ∗ S) ∗ T = R ∗ (S ∗ T)")
        .mrel("R", "X", "X")
        .mrel("S", "X", "X")
        .mrel("T", "X", "X")
        .conds(&["R", "S", "T"], class)
        .claim("(R * S) * T == R * (S * T)")
        .build()
}

fn closure(id: &str, class: Class, pred: &str) -> Law {
    law(id, T, &format!("{} is closed under ∗", class.name()))
        .mrel("R", "X", "X")
        .mrel("S", "X", "X")
        .conds(&["R", "S"], class)
        .claim(&format!("{pred}(R * S)"))
        .build()
}

fn units(id: &str, class: Class) -> Law {
    law(id, T, "1 ∗ R = R = R ∗ 1").mrel("R", "X", "X").cond("R", class).claim("1 * R == R && R * 1 == R").build()
}

fn relational() -> Vec<Law> {
    vec![
        law("R-residuation-left", T, "R S ⊆ T ⇔ R ⊆ T / S")
            .rel("R", "X", "Y")
            .rel("S", "Y", "Z")
            .rel("T", "X", "Z")
            .claim("R ; S <= T <=> R <= T / S")
            .build(),
        law("R-residuation-right", T, "R S ⊆ T ⇔ S ⊆ R \\ T")
            .rel("R", "X", "Y")
            .rel("S", "Y", "Z")
            .rel("T", "X", "Z")
            .claim("R ; S <= T <=> S <= R \\ T")
            .build(),
        law("R-modular", T, "R S ∩ T ⊆ (R ∩ T S˘) S")
            .rel("R", "X", "Y")
            .rel("S", "Y", "Z")
            .rel("T", "X", "Z")
            .claim("R ; S & T <= (R & T ; S^) ; S")
            .build(),
        law("R-converse-involution", T, "R˘˘ = R and (R S)˘ = S˘ R˘")
            .rel("R", "X", "Y")
            .rel("S", "Y", "Z")
            .claim("R^^ == R && (R ; S)^ == S^ ; R^")
            .build(),
        law("R-syq-converse", T, "syq(R, S)˘ = syq(S, R)")
            .rel("R", "Z", "X")
            .rel("S", "Z", "Y")
            .claim("syq(R, S)^ == syq(S, R)")
            .build(),
        law("R-domain-test", T, "dom(R) ⊆ Id and dom(R) R = R")
            .rel("R", "X", "Y")
            .claim("test(dom(R)) && dom(R) ; R == R")
            .build(),
    ]
}

fn power() -> Vec<Law> {
    vec![
        law("L2.1-lambda-alpha-inverse", T, "α(Λ(R)) = R")
            .rel("R", "X", "Y")
            .claim("a(L(R)) == R")
            .sizes(&[("X", 3), ("Y", 3)])
            .build(),
        law("L2.1-alpha-lambda-inverse", T, "Λ(α(f)) = f for outer deterministic f")
            .mrel("f", "X", "Y")
            .cond("f", OuterDeterministic)
            .claim("L(a(f)) == f")
            .sizes(&[("X", 3), ("Y", 3)])
            .build(),
        law("L2.1-lambda-alpha-adjoint", T, "f = Λ(R) ⇔ R = α(f) for outer deterministic f")
            .mrel("f", "X", "Y")
            .rel("R", "X", "Y")
            .cond("f", OuterDeterministic)
            .claim("f == L(R) <=> R == a(f)")
            .build(),
        law("L2.1-lambda-precompose", T, "f Λ(R) = Λ(f R) for deterministic f")
            .rel("f", "X", "Y")
            .rel("R", "Y", "Z")
            .cond("f", OuterDeterministic)
            .claim("f ; L(R) == L(f ; R)")
            .build(),
        law("L2.1-lambda-precompose-power", T, "f Λ(R) = Λ(f R) for f : X → P Y deterministic")
            .mrel("f", "X", "Y")
            .var("R", "P Y", "Z")
            .cond("f", OuterDeterministic)
            .claim("f ; L(R) == L(f ; R)")
            .build(),
        law("L2.1-lambda-ni", T, "Λ(∋) = Id").claim("L(mem[X]^) == Id").sizes(&[("X", 3)]).build(),
        law("L2.1-lambda-image", T, "Λ(R S) = Λ(R) P(S)")
            .rel("R", "X", "Y")
            .rel("S", "Y", "Z")
            .claim("L(R ; S) == L(R) ; Pf(S)")
            .build(),
        law("L2.1-eta-image", T, "η P(R) = Λ(R)")
            .rel("R", "X", "Y")
            .claim("1 ; Pf(R) == L(R)")
            .sizes(&[("X", 3), ("Y", 3)])
            .build(),
        law("L2.1-image-right-inverse", T, "α(η P(R)) = R")
            .rel("R", "X", "Y")
            .claim("a(1 ; Pf(R)) == R")
            .sizes(&[("X", 3), ("Y", 3)])
            .build(),
        law("L2.1-lambda-function", T, "Λ(f) = f η for deterministic f")
            .rel("f", "X", "Y")
            .cond("f", OuterDeterministic)
            .claim("L(f) == f ; 1")
            .sizes(&[("X", 3), ("Y", 3)])
            .build(),
        law("L2.1-eta-natural", T, "η P(f) = f η for deterministic f")
            .rel("f", "X", "Y")
            .cond("f", OuterDeterministic)
            .claim("1 ; Pf(f) == f ; 1")
            .sizes(&[("X", 3), ("Y", 3)])
            .build(),
        law("L2.1-mu-natural", T, "P²(f) μ = μ P(f) for deterministic f")
            .rel("f", "X", "Y")
            .cond("f", OuterDeterministic)
            .claim("Pf(Pf(f)) ; mu == mu ; Pf(f)")
            .build(),
        law("L2.1-monad-assoc", T, "P(μ) μ = μ μ").claim("Pf(mu[X]) ; mu == mu ; mu").build(),
        law("L2.1-monad-unit-image", T, "P(η) μ = Id").claim("Pf(1[X]) ; mu == Id").sizes(&[("X", 3)]).build(),
        law("L2.1-monad-unit", T, "η μ = Id").claim("1 ; mu[X] == Id").sizes(&[("X", 3)]).build(),
        law("L2.1-alpha-eta", T, "α(η) = Id").claim("a(1[X]) == Id").sizes(&[("X", 3)]).build(),
        law("L2.1-lambda-complement", T, "Λ(R) C = Λ(−R)")
            .rel("R", "X", "Y")
            .claim("L(R) ; Cc == L(-R)")
            .sizes(&[("X", 3), ("Y", 3)])
            .build(),
        law("L2.1-lambda-omega-right", T, "Λ(R) Ω = R˘ \\ ∈")
            .rel("R", "X", "Y")
            .claim("L(R) ; Om == R^ \\ mem")
            .build(),
        law("L2.1-lambda-omega-left", T, "Λ(R) Ω = (∋ / R)˘")
            .rel("R", "X", "Y")
            .claim("L(R) ; Om == (mem^ / R)^")
            .build(),
        law("L2.1-image-functor", T, "P(R S) = P(R) P(S)")
            .rel("R", "X", "Y")
            .rel("S", "Y", "Z")
            .claim("Pf(R ; S) == Pf(R) ; Pf(S)")
            .build(),
        law("L2.1-image-identity", T, "P(Id) = Id").claim("Pf(Id[X]) == Id").sizes(&[("X", 3)]).build(),
    ]
}

fn extension() -> Vec<Law> {
    vec![
        law("L2.2-kleisli-image-mu", T, "R_P = P(R) μ").mrel("R", "X", "Y").claim("kl(R) == Pf(R) ; mu").build(),
        law("L2.2-kleisli-alpha", T, "R_P = P(α(R))").mrel("R", "X", "Y").claim("kl(R) == Pf(a(R))").build(),
        law("L2.2-extension-compose", T, "(R S_P)_P = R_P S_P")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .claim("kl(R ; kl(S)) == kl(R) ; kl(S)")
            .build(),
        law("L2.2-extension-unit", T, "η_P = Id").claim("kl(1[X]) == Id").sizes(&[("X", 3)]).build(),
        law("L2.2-extension-function", T, "η f_P = f for deterministic f")
            .mrel("f", "X", "Y")
            .cond("f", OuterDeterministic)
            .claim("1 ; kl(f) == f")
            .sizes(&[("X", 3), ("Y", 3)])
            .build(),
        law("L2.2-univalent-decompose", T, "R = dom(R) η R_P for univalent R")
            .mrel("R", "X", "Y")
            .cond("R", OuterUnivalent)
            .claim("R == dom(R) ; 1 ; kl(R)")
            .build(),
        law("L2.2-univalent-lift", T, "R_∗ = dom(R)_∗ R_P for univalent R")
            .mrel("R", "X", "Y")
            .cond("R", OuterUnivalent)
            .claim("pl(R) == pl(dom(R) ; 1) ; kl(R)")
            .build(),
        law("L2.2-deterministic-lift", T, "R = η R_P and R_∗ = R_P for deterministic R")
            .mrel("R", "X", "Y")
            .cond("R", OuterDeterministic)
            .claim("R == 1 ; kl(R) && pl(R) == kl(R)")
            .sizes(&[("X", 3), ("Y", 2)])
            .build(),
        law("L2.2-peleg-via-lift", T, "R ∗ S = R S_∗")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .claim("R * S == R ; pl(S)")
            .build(),
        law("L2.2-peleg-lift-unit", T, "η_∗ = Id").claim("pl(1[X]) == Id").sizes(&[("X", 3)]).build(),
        law("L2.2-peleg-lift-eta", T, "η R_∗ = R").mrel("R", "X", "Y").claim("1 ; pl(R) == R").build(),
        law("L2.2-univalent-extension", T, "(S f_∗)_∗ = S_∗ f_∗ for univalent f")
            .mrel("S", "X", "Y")
            .mrel("f", "Y", "Z")
            .cond("f", OuterUnivalent)
            .claim("pl(S ; pl(f)) == pl(S) ; pl(f)")
            .build(),
    ]
}

fn peleg() -> Vec<Law> {
    vec![
        law("L2.2-peleg-left-unit", T, "1 ∗ S = S")
            .mrel("S", "X", "Y")
            .claim("1 * S == S")
            .sizes(&[("X", 3), ("Y", 2)])
            .build(),
        law("L2.2-peleg-right-unit", T, "R ∗ 1 = R")
            .mrel("R", "X", "Y")
            .claim("R * 1 == R")
            .sizes(&[("X", 3), ("Y", 2)])
            .build(),
        law("L2.2-subassociativity", T, "(R ∗ S) ∗ T ⊆ R ∗ (S ∗ T)")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .mrel("T", "X", "X")
            .claim("(R * S) * T <= R * (S * T)")
            .build(),
        law("L2.2-first-arg-union", T, "(R ∪ S) ∗ T = R ∗ T ∪ S ∗ T")
            .mrel("R", "X", "Y")
            .mrel("S", "X", "Y")
            .mrel("T", "Y", "Z")
            .claim("(R | S) * T == (R * T) | (S * T)")
            .build(),
        law("L2.2-univalent-assoc", T, "(R ∗ S) ∗ f = R ∗ (S ∗ f) for univalent f")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .mrel("f", "X", "X")
            .cond("f", OuterUnivalent)
            .claim("(R * S) * f == R * (S * f)")
            .build(),
        law("L2.2-down-peleg", T, "↓R = R ∗ ↓1")
            .mrel("R", "X", "X")
            .claim("down(R) == R * down(1)")
            .sizes(&[("X", 3)])
            .build(),
        law("L2.2-up-omega", T, "↑R = R Ω")
            .mrel("R", "X", "Y")
            .claim("up(R) == R ; Om")
            .sizes(&[("X", 2), ("Y", 3)])
            .build(),
        law("L2.2-down-omega", T, "↓R = R Ω˘")
            .mrel("R", "X", "Y")
            .claim("down(R) == R ; Om^")
            .sizes(&[("X", 2), ("Y", 3)])
            .build(),
        law("L2.2-preorders-coincide-deterministic", T, "⊑↑, ⊑↓ and ⊑↕ coincide on deterministic multirelations")
            .mrel("f", "X", "Y")
            .mrel("g", "X", "Y")
            .conds(&["f", "g"], OuterDeterministic)
            .claim("(f <u= g <=> f <d= g) && (f <d= g <=> f <ud= g)")
            .sizes(&[("X", 2), ("Y", 3)])
            .build(),
        law("L2.2-inner-union-assoc", T, "(R ⋓ S) ⋓ T = R ⋓ (S ⋓ T)")
            .mrel("R", "X", "Y")
            .mrel("S", "X", "Y")
            .mrel("T", "X", "Y")
            .claim("icup(icup(R, S), T) == icup(R, icup(S, T))")
            .build(),
        law("L2.2-inner-union-comm", T, "R ⋓ S = S ⋓ R")
            .mrel("R", "X", "Y")
            .mrel("S", "X", "Y")
            .claim("icup(R, S) == icup(S, R) && icap(R, S) == icap(S, R)")
            .build(),
        law("L2.2-inner-units", T, "R ⋓ 1⋓ = R = R ⋒ 1⋒")
            .mrel("R", "X", "Y")
            .claim("icup(R, ilow) == R && icap(R, ihigh) == R")
            .sizes(&[("X", 2), ("Y", 3)])
            .build(),
        law("L2.2-inner-union-idempotent-univalent", T, "R ⋓ R = R for univalent R")
            .mrel("R", "X", "Y")
            .cond("R", OuterUnivalent)
            .claim("icup(R, R) == R")
            .sizes(&[("X", 3), ("Y", 3)])
            .build(),
        law("NEG-inner-union-idempotent", N, "R ⋓ R = R")
            .mrel("R", "X", "Y")
            .claim("icup(R, R) == R")
            .pin(&[("X", 1), ("Y", 2)], &[("R", "0:{0} 0:{1}")])
            .build(),
        law("L2.2-inner-complement-involution", T, "∁∁R = R and dual(dual(R)) = R")
            .mrel("R", "X", "Y")
            .claim("icpl(icpl(R)) == R && dual(dual(R)) == R")
            .sizes(&[("X", 2), ("Y", 3)])
            .build(),
        law("L2.2-kleisli-compose-lift", T, "R @ S = R S_P")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .claim("R @ S == R ; kl(S)")
            .build(),
        law("L2.2-kleisli-assoc", T, "(R @ S) @ T = R @ (S @ T)")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .mrel("T", "X", "X")
            .claim("(R @ S) @ T == R @ (S @ T)")
            .build(),
        law("L2.2-kleisli-right-unit", T, "R @ η = R")
            .mrel("R", "X", "Y")
            .claim("R @ 1 == R")
            .sizes(&[("X", 3), ("Y", 2)])
            .build(),
        law("L2.2-kleisli-left-unit-deterministic", T, "η @ f = f for deterministic f")
            .mrel("f", "X", "Y")
            .cond("f", OuterDeterministic)
            .claim("1 @ f == f")
            .sizes(&[("X", 3), ("Y", 3)])
            .build(),
        law("NEG-kleisli-left-unit", N, "η @ R = R")
            .mrel("R", "X", "Y")
            .claim("1 @ R == R")
            .pin(&[("X", 1), ("Y", 2)], &[("R", "0:{0} 0:{1}")])
            .build(),
        law("NEG-peleg-assoc-general", N, "(R ∗ S) ∗ T = R ∗ (S ∗ T)")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .mrel("T", "X", "X")
            .claim("(R * S) * T == R * (S * T)")
            .pin(&[("X", 3)], &[("R", "0:{1,2} 1:{0} 2:{0}"), ("S", "0:{1,2} 1:{0} 2:{0}"), ("T", "0:{0,1} 0:{1,2}")])
            .note("(a,{a,b,c}) lies in R ∗ (R ∗ S) but not in (R ∗ R) ∗ S")
            .build(),
        law("NEG-peleg-second-arg-union", N, "R ∗ (S ∪ T) = R ∗ S ∪ R ∗ T")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .mrel("T", "X", "X")
            .claim("R * (S | T) == (R * S) | (R * T)")
            .pin(&[("X", 2)], &[("R", "0:{0,1}"), ("S", "0:{0}"), ("T", "1:{1}")])
            .build(),
    ]
}

fn deterministic() -> Vec<Law> {
    vec![
        closure("P2.2-outer-univalent-closure", OuterUnivalent, "ouni"),
        assoc("P2.2-outer-univalent-category", OuterUnivalent),
        assoc("P3.2-outer-det-category", OuterDeterministic),
        closure("P3.2-outer-det-closure", OuterDeterministic, "odet"),
        units("P3.2-outer-det-units", OuterDeterministic),
        assoc("P3.2-inner-det-category", InnerDeterministic),
        closure("P3.2-inner-det-closure", InnerDeterministic, "idet"),
        units("P3.2-inner-det-units", InnerDeterministic),
        law("L3.1-lambda-outer-det", T, "Λ(R) is outer deterministic")
            .rel("R", "X", "Y")
            .claim("odet(L(R))")
            .sizes(&[("X", 3), ("Y", 3)])
            .build(),
        law("L3.1-eta-inner-det", T, "η(R) = R 1 is inner deterministic")
            .rel("R", "X", "Y")
            .claim("idet(R ; 1)")
            .sizes(&[("X", 3), ("Y", 3)])
            .build(),
        law("L3.1-alpha-eta-inverse", T, "α(R 1) = R")
            .rel("R", "X", "Y")
            .claim("a(R ; 1) == R")
            .sizes(&[("X", 3), ("Y", 3)])
            .build(),
        law("L3.1-eta-alpha-inverse", T, "α(S) 1 = S for inner deterministic S")
            .mrel("S", "X", "Y")
            .cond("S", InnerDeterministic)
            .claim("a(S) ; 1 == S")
            .sizes(&[("X", 3), ("Y", 3)])
            .build(),
        law("L3.1-inner-det-peleg", T, "R ∗ S = R 1˘ S for inner deterministic R")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .cond("R", InnerDeterministic)
            .claim("R * S == R ; 1^ ; S")
            .build(),
        law("L3.1-inner-det-alpha", T, "α(R) = R 1˘ for inner deterministic R")
            .mrel("R", "X", "Y")
            .cond("R", InnerDeterministic)
            .claim("a(R) == R ; 1^")
            .sizes(&[("X", 3), ("Y", 3)])
            .build(),
        law("L3.1-inner-det-assoc", T, "R ∗ (S ∗ T) = (R ∗ S) ∗ T for inner deterministic R")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .mrel("T", "X", "X")
            .cond("R", InnerDeterministic)
            .claim("R * (S * T) == (R * S) * T")
            .build(),
        law("L3.2-lambda-functor", T, "Λ(R S) = Λ(R) ∗ Λ(S) and Λ(Id) = 1")
            .rel("R", "X", "Y")
            .rel("S", "Y", "Z")
            .claim("L(R ; S) == L(R) * L(S) && L(Id[X]) == 1")
            .build(),
        law("L3.2-eta-functor", T, "η(R S) = η(R) ∗ η(S) and η(Id) = 1")
            .rel("R", "X", "Y")
            .rel("S", "Y", "Z")
            .claim("(R ; S) ; 1 == (R ; 1) * (S ; 1) && Id[X] ; 1 == 1")
            .build(),
        law("L3.2-alpha-functor-outer", T, "α(R ∗ S) = α(R) α(S) for outer deterministic R, S")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .conds(&["R", "S"], OuterDeterministic)
            .claim("a(R * S) == a(R) ; a(S)")
            .sizes(&[("X", 3), ("Y", 3), ("Z", 2)])
            .build(),
        law("L3.2-alpha-functor-inner", T, "α(R ∗ S) = α(R) α(S) for inner deterministic R, S")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .conds(&["R", "S"], InnerDeterministic)
            .claim("a(R * S) == a(R) ; a(S)")
            .build(),
        law("L3.2-isotone-relations", T, "R ⊆ S ⇒ η(R) ⊆ η(S) and Λ(R) ⊑↕ Λ(S)")
            .rel("R", "X", "Y")
            .rel("S", "X", "Y")
            .claim("R <= S => R ; 1 <= S ; 1 && L(R) <ud= L(S)")
            .build(),
        law("L3.2-isotone-alpha", T, "R ⊆ S ⇒ α(R) ⊆ α(S)")
            .mrel("R", "X", "Y")
            .mrel("S", "X", "Y")
            .claim("R <= S => a(R) <= a(S)")
            .build(),
        law("REG-lambda-not-subset-monotone", PASS, "R ⊆ S but Λ(R) ⊈ Λ(S) for R = ∅, S = {(a,a)}")
            .rel("R", "X", "X")
            .rel("S", "X", "X")
            .claim("R <= S && !(L(R) <= L(S))")
            .pin(&[("X", 1)], &[("R", ""), ("S", "0:0")])
            .build(),
        law("P3.2-quantaloid-inner-det-left", T, "R ∗ (S ∪ T) = R ∗ S ∪ R ∗ T on inner deterministic")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .mrel("T", "X", "X")
            .conds(&["R", "S", "T"], InnerDeterministic)
            .claim("R * (S | T) == (R * S) | (R * T) && idet(S | T)")
            .build(),
        law("P3.2-quantaloid-inner-det-right", T, "(S ∪ T) ∗ R = S ∗ R ∪ T ∗ R on inner deterministic")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .mrel("T", "X", "X")
            .conds(&["R", "S", "T"], InnerDeterministic)
            .claim("(S | T) * R == (S * R) | (T * R)")
            .build(),
        law("P3.2-quantaloid-inner-det-empty", T, "R ∗ ∅ = ∅ for inner deterministic R")
            .mrel("R", "X", "Y")
            .cond("R", InnerDeterministic)
            .claim("R * 0[Y,P Z] == 0[X,P Z]")
            .sizes(&[("X", 3), ("Y", 3)])
            .build(),
        law("P3.2-quantaloid-outer-det-left", T, "R ∗ (S ⋓ T) = R ∗ S ⋓ R ∗ T on outer deterministic")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .mrel("T", "X", "X")
            .conds(&["R", "S", "T"], OuterDeterministic)
            .claim("R * icup(S, T) == icup(R * S, R * T) && odet(icup(S, T))")
            .build(),
        law("P3.2-quantaloid-outer-det-right", T, "(S ⋓ T) ∗ R = S ∗ R ⋓ T ∗ R on outer deterministic")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .mrel("T", "X", "X")
            .conds(&["R", "S", "T"], OuterDeterministic)
            .claim("icup(S, T) * R == icup(S * R, T * R)")
            .build(),
        law("P3.2-quantaloid-outer-det-empty", T, "R ∗ 1⋓ = 1⋓ = 1⋓ ∗ R for outer deterministic R")
            .mrel("R", "X", "X")
            .cond("R", OuterDeterministic)
            .claim("R * ilow[X,X] == ilow && ilow * R == ilow[X,X]")
            .sizes(&[("X", 3)])
            .build(),
        law("L3.2-lambda-union", T, "Λ(R ∪ S) = Λ(R) ⋓ Λ(S) and η(R ∪ S) = η(R) ∪ η(S)")
            .rel("R", "X", "Y")
            .rel("S", "X", "Y")
            .claim("L(R | S) == icup(L(R), L(S)) && (R | S) ; 1 == (R ; 1) | (S ; 1)")
            .build(),
        law("L3.2-alpha-inner-union", T, "α(S ⋓ T) = α(S) ∪ α(T) for outer deterministic S, T")
            .mrel("S", "X", "Y")
            .mrel("T", "X", "Y")
            .conds(&["S", "T"], OuterDeterministic)
            .claim("a(icup(S, T)) == a(S) | a(T)")
            .sizes(&[("X", 2), ("Y", 3)])
            .build(),
    ]
}

fn galois() -> Vec<Law> {
    vec![
        law("P3.3-galois-alpha-lambda", T, "α(R) ⊆ T ⇔ R ⊑↓ Λ(T)")
            .mrel("R", "X", "Y")
            .rel("T", "X", "Y")
            .claim("a(R) <= T <=> R <d= L(T)")
            .build(),
        law("P3.3-galois-eta-alpha", T, "η(T) ⊑↓ S ⇔ T ⊆ α(S)")
            .rel("T", "X", "Y")
            .mrel("S", "X", "Y")
            .claim("T ; 1 <d= S <=> T <= a(S)")
            .build(),
        law("P3.3-galois-fission-fusion", T, "δi(R) ⊑↓ S ⇔ R ⊑↓ δo(S)")
            .mrel("R", "X", "Y")
            .mrel("S", "X", "Y")
            .claim("di(R) <d= S <=> R <d= do(S)")
            .build(),
        law("P3.3-alpha-inner-intersection", T, "α(R ⋒ S) = α(R) ∩ α(S)")
            .mrel("R", "X", "Y")
            .mrel("S", "X", "Y")
            .claim("a(icap(R, S)) == a(R) & a(S)")
            .build(),
        law("P3.3-monotone-lambda-eta", T, "T ⊆ V ⇒ Λ(T) ⊑↓ Λ(V) and η(T) ⊑↓ η(V)")
            .rel("T", "X", "Y")
            .rel("V", "X", "Y")
            .claim("T <= V => L(T) <d= L(V) && T ; 1 <d= V ; 1")
            .build(),
        law("P3.3-monotone-alpha", T, "R ⊑↓ S ⇒ α(R) ⊆ α(S)")
            .mrel("R", "X", "Y")
            .mrel("S", "X", "Y")
            .claim("R <d= S => a(R) <= a(S)")
            .build(),
        law("P3.3-fusion-closure", T, "δo is a closure operator for ⊑↓")
            .mrel("R", "X", "Y")
            .mrel("S", "X", "Y")
            .claim("(R <d= S => do(R) <d= do(S)) && R <d= do(R) && do(do(R)) == do(R)")
            .build(),
        law("P3.3-fission-interior", T, "δi is an interior operator for ⊑↓")
            .mrel("R", "X", "Y")
            .mrel("S", "X", "Y")
            .claim("(R <d= S => di(R) <d= di(S)) && di(R) <d= R && di(di(R)) == di(R)")
            .build(),
        law("P3.3-fusion-least", T, "R ⊑↓ S ⇔ δo(R) ⊑↓ S for outer deterministic S")
            .mrel("R", "X", "Y")
            .mrel("S", "X", "Y")
            .cond("S", OuterDeterministic)
            .claim("R <d= S <=> do(R) <d= S")
            .build(),
        law("P3.3-fission-greatest", T, "S ⊑↓ R ⇔ S ⊑↓ δi(R) for inner deterministic S")
            .mrel("R", "X", "Y")
            .mrel("S", "X", "Y")
            .cond("S", InnerDeterministic)
            .claim("S <d= R <=> S <d= di(R)")
            .build(),
        law("P3.3-factorisation", T, "Λ and η are injective; α is onto")
            .rel("T", "X", "Y")
            .rel("V", "X", "Y")
            .claim("(L(T) == L(V) => T == V) && (T ; 1 == V ; 1 => T == V) && a(L(T)) == T")
            .note("uniqueness of the factorisations up to isomorphism is not mechanised")
            .build(),
        law("REG-galois-subset-alpha-lambda", FAIL, "α(R) ⊆ S ⇒ R ⊆ Λ(S) fails for R = {(a,∅)}, S = {(a,b)}")
            .mrel("R", "X", "Y")
            .rel("S", "X", "Y")
            .claim("a(R) <= S => R <= L(S)")
            .pin(&[("X", 1), ("Y", 1)], &[("R", "0:{}"), ("S", "0:0")])
            .build(),
        law("REG-galois-subset-lambda-alpha", FAIL, "R ⊆ α(S) ⇒ Λ(R) ⊆ S fails for R = ∅, S = {(a,{b})}")
            .rel("R", "X", "Y")
            .mrel("S", "X", "Y")
            .claim("R <= a(S) => L(R) <= S")
            .pin(&[("X", 1), ("Y", 1)], &[("R", ""), ("S", "0:{0}")])
            .build(),
        law("REG-galois-subset-alpha-eta", FAIL, "α(R) ⊆ S ⇒ R ⊆ η(S) fails for R = {(a,{b1,b2})}")
            .mrel("R", "X", "Y")
            .rel("S", "X", "Y")
            .claim("a(R) <= S => R <= S ; 1")
            .pin(&[("X", 1), ("Y", 2)], &[("R", "0:{0,1}"), ("S", "0:0 0:1")])
            .build(),
        law("REG-galois-subset-eta-alpha", FAIL, "R ⊆ α(S) ⇒ η(R) ⊆ S fails for S = {(a,{b1,b2})}")
            .rel("R", "X", "Y")
            .mrel("S", "X", "Y")
            .claim("R <= a(S) => R ; 1 <= S")
            .pin(&[("X", 1), ("Y", 2)], &[("R", "0:0 0:1"), ("S", "0:{0,1}")])
            .build(),
    ]
}

fn fusion() -> Vec<Law> {
    let mrel1 = |id: &str, statement: &str, claim: &str| law(id, T, statement).mrel("R", "X", "Y").claim(claim);
    vec![
        mrel1("L3.3-fusion-lambda-alpha", "δo(R) = Λ(α(R))", "do(R) == L(a(R))").build(),
        mrel1("L3.3-fission-eta-alpha", "δi(R) = α(R) 1", "di(R) == a(R) ; 1").build(),
        mrel1("L3.3-fission-explicit", "δi(R) = ↓R ∩ A⋓", "di(R) == down(R) & At")
            .sizes(&[("X", 1), ("Y", 3)])
            .build(),
        mrel1("L3.3-fusion-down-explicit", "↓δo(R) = −↑(−δi(R) ∩ A⋓) = −↑(−↓R ∩ A⋓)", "down(do(R)) == -up(-di(R) & At) && down(do(R)) == -up(-down(R) & At)")
            .sizes(&[("X", 1), ("Y", 3)])
            .build(),
        mrel1(
            "L3.3-fusion-up-explicit",
            "↑δo(R) = dual(↑δi(R)) = −↓∁δi(R) = −↓(∁↓R ∩ A⋒)",
            "up(do(R)) == dual(up(di(R))) && up(do(R)) == -down(icpl(di(R))) && up(do(R)) == -down(icpl(down(R)) & coAt)",
        )
        .sizes(&[("X", 1), ("Y", 3)])
        .build(),
        mrel1("L3.3-fusion-explicit", "δo(R) = −↑(−↓R ∩ A⋓) ∩ −↓(∁↓R ∩ A⋒)", "do(R) == -up(-down(R) & At) & -down(icpl(down(R)) & coAt)")
            .sizes(&[("X", 1), ("Y", 3)])
            .build(),
        law("C3.3-isomorphism", T, "δo δi = id on outer, δi δo = id on inner deterministic")
            .mrel("S", "X", "Y")
            .mrel("R", "X", "Y")
            .cond("S", OuterDeterministic)
            .cond("R", InnerDeterministic)
            .claim("do(di(S)) == S && di(do(R)) == R")
            .sizes(&[("X", 2), ("Y", 3)])
            .build(),
        law("C3.3-functor-outer-det", T, "δi(R ∗ S) = δi(R) ∗ δi(S) for outer deterministic R, S")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .conds(&["R", "S"], OuterDeterministic)
            .claim("di(R * S) == di(R) * di(S)")
            .sizes(&[("X", 3)])
            .build(),
        law("C3.3-functor-inner-det", T, "δo(R ∗ S) = δo(R) ∗ δo(S) for inner deterministic R, S")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .conds(&["R", "S"], InnerDeterministic)
            .claim("do(R * S) == do(R) * do(S)")
            .build(),
        law("C3.3-quantaloid-preserved", T, "δo(R ∪ S) = δo(R) ⋓ δo(S) on inner, δi(R ⋓ S) = δi(R) ∪ δi(S) on outer deterministic")
            .mrel("R", "X", "Y")
            .mrel("S", "X", "Y")
            .mrel("F", "X", "Y")
            .mrel("G", "X", "Y")
            .conds(&["R", "S"], InnerDeterministic)
            .conds(&["F", "G"], OuterDeterministic)
            .claim("do(R | S) == icup(do(R), do(S)) && di(icup(F, G)) == di(F) | di(G)")
            .build(),
        mrel1("L3.4-alpha-lift", "α(R_∗) = α(dom(R)_∗) α(R)", "a(pl(R)) == a(pl(dom(R) ; 1)) ; a(R)").build(),
        law("L3.4-alpha-peleg-sub", T, "α(R ∗ S) ⊆ α(R) α(S)")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .claim("a(R * S) <= a(R) ; a(S)")
            .build(),
        law("NEG-alpha-peleg-eq", N, "α(R ∗ S) = α(R) α(S)")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .claim("a(R * S) == a(R) ; a(S)")
            .pin(&[("X", 2), ("Y", 2), ("Z", 2)], &[("R", "0:{0,1}"), ("S", "0:{0,1}")])
            .build(),
        mrel1("L3.4-alpha-down", "α(↓R) = α(R)", "a(down(R)) == a(R)").sizes(&[("X", 2), ("Y", 3)]).build(),
        law("REG-alpha-peleg-strict", PASS, "R ∗ R = ∅ and α(R) α(R) = α(R) = {(a,a),(a,b)} for R = {(a,{a,b})}")
            .mrel("R", "X", "X")
            .rel("E", "X", "X")
            .claim("R * R == 0 && a(R) ; a(R) == E && a(R) == E")
            .pin(&[("X", 2)], &[("R", "0:{0,1}"), ("E", "0:0 0:1")])
            .build(),
        mrel1("L3.4-fission-idempotent", "δi δi = δi", "di(di(R)) == di(R)").sizes(&[("X", 2), ("Y", 3)]).build(),
        mrel1("L3.4-fusion-idempotent", "δo δo = δo", "do(do(R)) == do(R)").sizes(&[("X", 2), ("Y", 3)]).build(),
        mrel1("L3.4-fission-after-fusion", "δi δo = δi", "di(do(R)) == di(R)").sizes(&[("X", 2), ("Y", 3)]).build(),
        mrel1("L3.4-fusion-after-fission", "δo δi = δo", "do(di(R)) == do(R)").sizes(&[("X", 2), ("Y", 3)]).build(),
        law("L3.4-fission-peleg", T, "δi(R) ∗ S = α(R) S")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .claim("di(R) * S == a(R) ; S")
            .build(),
        law("L3.4-fission-peleg-sub", T, "δi(R ∗ S) ⊆ δi(R) ∗ δi(S)")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .claim("di(R * S) <= di(R) * di(S)")
            .build(),
        law("L3.4-fusion-peleg-egli-milner", T, "δo(R ∗ S) ⊑↕ δo(R) ∗ δo(S)")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .claim("do(R * S) <ud= do(R) * do(S)")
            .build(),
        mrel1("L3.4-kleisli-fusion", "R_P = δo(∋ R)", "kl(R) == do(mem^ ; R)").build(),
        mrel1("L3.4-fusion-kleisli", "δo(R) = η R_P = Λ(R) μ", "do(R) == 1 ; kl(R) && do(R) == L(R) ; mu").build(),
        mrel1("L3.4-fission-decompose", "δi(R) = 1 (∋ R ∋ 1)", "di(R) == 1 ; (mem^ ; R ; mem^ ; 1)").build(),
    ]
}

fn inner_univalent() -> Vec<Law> {
    let mrel1 = |id: &str, statement: &str, claim: &str| law(id, T, statement).mrel("R", "X", "Y").claim(claim);
    vec![
        mrel1("L4-tau-peleg-empty", "τ(R) = R ∗ ∅", "tau(R) == R * 0").sizes(&[("X", 2), ("Y", 3)]).build(),
        mrel1("L4-alpha-tau", "α(τ(R)) = ∅", "a(tau(R)) == 0").build(),
        mrel1("L4-alpha-nu", "α(ν(R)) = α(R)", "a(nu(R)) == a(R)").sizes(&[("X", 2), ("Y", 3)]).build(),
        mrel1(
            "L4-fission-nu",
            "ν(δi(R)) = δi(R) = δi(ν(R)) and τ(δi(R)) = ∅",
            "nu(di(R)) == di(R) && di(nu(R)) == di(R) && tau(di(R)) == 0",
        )
        .sizes(&[("X", 2), ("Y", 3)])
        .build(),
        mrel1("L4-fusion-nu", "δo(ν(R)) = δo(R)", "do(nu(R)) == do(R)").sizes(&[("X", 2), ("Y", 3)]).build(),
        law("L4-peleg-nu-tau", T, "R ∗ S = ν(R) ∗ S ∪ τ(R)")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .claim("R * S == (nu(R) * S) | tau(R)")
            .build(),
        law("L4-tau-peleg", T, "τ(R ∗ S) = τ(R) ∪ ν(R) ∗ τ(S)")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .claim("tau(R * S) == tau(R) | (nu(R) * tau(S))")
            .build(),
        law("REG-nu-fusion", PASS, "ν(δo(R)) = ∅ ≠ δo(R) for R = {(a,∅)} on {a,b}")
            .mrel("R", "X", "Y")
            .claim("nu(do(R)) == 0 && !(nu(do(R)) == do(R))")
            .pin(&[("X", 2), ("Y", 1)], &[("R", "0:{}")])
            .build(),
        mrel1("L4-inner-univalent-atoms", "R inner univalent ⇔ ν(R) ⊆ A⋓", "iuni(R) <=> nu(R) <= At")
            .sizes(&[("X", 2), ("Y", 3)])
            .build(),
        mrel1("L4-inner-univalent-fission", "R inner univalent ⇔ ν(R) = δi(R)", "iuni(R) <=> nu(R) == di(R)")
            .sizes(&[("X", 2), ("Y", 3)])
            .build(),
        mrel1("L4-inner-univalent-split", "R inner univalent ⇔ R = δi(R) ∪ τ(R)", "iuni(R) <=> R == di(R) | tau(R)")
            .sizes(&[("X", 2), ("Y", 3)])
            .build(),
        law("L4-peleg-inner-univalent", T, "R ∗ S = α(R) S ∪ τ(R) for inner univalent R")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .cond("R", InnerUnivalent)
            .claim("R * S == (a(R) ; S) | tau(R)")
            .build(),
        law("L4-alpha-inner-univalent", T, "α(R ∗ S) = α(R) α(S) for inner univalent R")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .cond("R", InnerUnivalent)
            .claim("a(R * S) == a(R) ; a(S)")
            .build(),
        law("L4-determinise-inner-univalent", T, "δi and δo are functors on inner univalent R")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .cond("R", InnerUnivalent)
            .claim("di(R * S) == di(R) * di(S) && do(R * S) == do(R) * do(S)")
            .build(),
        assoc("P4-inner-univalent-category", InnerUnivalent),
        closure("P4-inner-univalent-closure", InnerUnivalent, "iuni"),
        units("P4-inner-univalent-units", InnerUnivalent),
        law("L4-quantaloid-inner-univalent", T, "∗ preserves ∪ in both arguments on inner univalent")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .mrel("T", "X", "X")
            .conds(&["R", "S", "T"], InnerUnivalent)
            .claim("(R | S) * T == (R * T) | (S * T) && R * (S | T) == (R * S) | (R * T) && iuni(R | S)")
            .build(),
        law("REG-quantaloid-empty-union-inner-univalent", FAIL, "R ∗ ∅ = ∅ fails for inner univalent R = {(a,∅)}")
            .mrel("R", "X", "Y")
            .cond("R", InnerUnivalent)
            .claim("R * 0[Y,P Z] == 0[X,P Z]")
            .pin(&[("X", 1), ("Y", 1), ("Z", 1)], &[("R", "0:{}")])
            .build(),
        law(
            "REG-quantaloid-empty-iunion-outer-univalent",
            FAIL,
            "∅ ∗ 1⋓ = 1⋓ fails: the empty ⋓-family is not preserved",
        )
        .claim("0[X,P Y] * ilow[Y,Z] == ilow[X,Z]")
        .pin(&[("X", 1), ("Y", 1), ("Z", 1)], &[])
        .build(),
        law("REG-alpha-not-injective", FAIL, "α(R) = α(S) ⇒ R = S fails for {(a,∅)} and {(a,∅),(b,∅)}")
            .mrel("R", "X", "Y")
            .mrel("S", "X", "Y")
            .conds(&["R", "S"], InnerUnivalent)
            .claim("a(R) == a(S) => R == S")
            .pin(&[("X", 2), ("Y", 1)], &[("R", "0:{}"), ("S", "0:{} 1:{}")])
            .build(),
    ]
}

fn fixpoints() -> Vec<Law> {
    let fix = |id: &str, statement: &str, claim: &str| {
        law(id, T, statement).mrel("R", "X", "Y").claim(claim).sizes(&[("X", 2), ("Y", 3)]).build()
    };
    let pre = |id: &str, statement: &str, claim: &str| law(id, T, statement).mrel("R", "X", "Y").claim(claim).build();
    vec![
        fix("L2.2-fix-inner-univalent", "R inner univalent ⇔ R = R ∩ (A⋓ ∪ 1⋓)", "iuni(R) <=> R == R & (At | ilow)"),
        fix("L2.2-fix-inner-total", "R inner total ⇔ R = R − 1⋓", "itot(R) <=> R == R - ilow"),
        fix("L2.2-fix-inner-det-atoms", "R inner deterministic ⇔ R = R ∩ A⋓", "idet(R) <=> R == R & At"),
        fix("L2.2-fix-inner-det-eta", "R inner deterministic ⇔ R = R 1˘ 1", "idet(R) <=> R == R ; 1^ ; 1"),
        fix("C3.3-fix-fission", "R inner deterministic ⇔ δi(R) = R", "idet(R) <=> di(R) == R"),
        fix("C3.3-fix-fusion", "R outer deterministic ⇔ δo(R) = R", "odet(R) <=> do(R) == R"),
        pre(
            "L5-outer-univalent-postfix",
            "R univalent ⇔ R ⊆ δo(R) ⇔ δo(R) ⊑↑ R",
            "(ouni(R) <=> R <= do(R)) && (ouni(R) <=> do(R) <u= R)",
        ),
        pre(
            "L5-outer-total-prefix",
            "δo(R) ⊆ R, δo(R) ⊑↓ R or R ⊑↑ δo(R) imply R total",
            "(do(R) <= R => otot(R)) && (do(R) <d= R => otot(R)) && (R <u= do(R) => otot(R))",
        ),
        pre("L5-fusion-postfix-coincide", "R ⊑↕ δo(R) ⇔ R ⊑↑ δo(R)", "R <ud= do(R) <=> R <u= do(R)"),
        pre("L5-outer-det-prefix", "δo(R) ⊑↕ R ⇒ R deterministic", "do(R) <ud= R => odet(R)"),
        pre(
            "L5-inner-univalent-fix",
            "R inner univalent ⇒ δi(R) ⊆ R and R ⊑↑ δi(R)",
            "iuni(R) => di(R) <= R && R <u= di(R)",
        ),
        pre("L5-fission-postfix-univalent", "R ⊑↓ δi(R) ⇒ R inner univalent", "R <d= di(R) => iuni(R)"),
        pre("L5-fission-postfix-coincide", "R ⊑↕ δi(R) ⇔ R ⊑↓ δi(R)", "R <ud= di(R) <=> R <d= di(R)"),
        pre("L5-inner-total-prefix", "R inner total ⇔ δi(R) ⊑↑ R", "itot(R) <=> di(R) <u= R"),
        pre("L5-fission-prefix-coincide", "δi(R) ⊑↕ R ⇔ δi(R) ⊑↑ R", "di(R) <ud= R <=> di(R) <u= R"),
        pre("L5-fission-postfix-det", "R ⊆ δi(R) ⇒ R inner deterministic", "R <= di(R) => idet(R)"),
    ]
}

fn total() -> Vec<Law> {
    let triple = |id: &str, kind: LawKind, r: &str, s: &str, note: &str| {
        law(id, kind, "(a,{a,b,c}) lies in exactly one of (R ∗ R) ∗ S and R ∗ (R ∗ S)")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .mrel("W", "X", "X")
            .conds(&["R", "S"], OuterTotal)
            .conds(&["R", "S"], InnerTotal)
            .claim("W <= (R * R) * S <=> W <= R * (R * S)")
            .pin(&[("X", 3)], &[("R", r), ("S", s), ("W", "0:{0,1,2}")])
            .note(note)
            .build()
    };
    vec![
        closure("L5-outer-total-closure", OuterTotal, "otot"),
        closure("L5-inner-total-closure", InnerTotal, "itot"),
        law("L4-peleg-inner-total-empty", T, "R ∗ ∅ = ∅ for inner total R")
            .mrel("R", "X", "Y")
            .cond("R", InnerTotal)
            .claim("R * 0[Y,P Z] == 0[X,P Z]")
            .sizes(&[("X", 2), ("Y", 3)])
            .build(),
        law("L5-outer-total-alpha", T, "α(R ∗ S) = α(R) α(S) for outer total R, S")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .conds(&["R", "S"], OuterTotal)
            .claim("a(R * S) == a(R) ; a(S)")
            .build(),
        law("L5-outer-total-determinise", T, "δi and δo preserve ∗ on outer total R, S")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .conds(&["R", "S"], OuterTotal)
            .claim("di(R * S) == di(R) * di(S) && do(R * S) == do(R) * do(S)")
            .build(),
        triple(
            "REG-nonassoc-triple",
            FAIL,
            "0:{0,1} 1:{0} 2:{2}",
            "0:{0,1} 1:{0,2} 2:{2}",
            "both R and S are outer deterministic here, so the two bracketings agree and W lies in both",
        ),
        triple(
            "REG-nonassoc-total-triple",
            FAIL,
            "0:{0,1,2} 1:{1,2} 2:{0,1,2}",
            "0:{2} 1:{0} 1:{1,2} 2:{2}",
            "W lies in R ∗ (R ∗ S) but not in (R ∗ R) ∗ S",
        ),
        law("REG-fission-peleg-outer-univalent", PASS, "δi(R ∗ S) = ∅ but δi(R) ∗ δi(S) = {(a,{a})}")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .mrel("F", "X", "X")
            .mrel("E", "X", "X")
            .conds(&["R", "S"], OuterUnivalent)
            .claim("di(R * S) == 0 && di(R) == F && di(R) * di(S) == E")
            .pin(&[("X", 2)], &[("R", "0:{0,1}"), ("S", "0:{0}"), ("F", "0:{0} 0:{1}"), ("E", "0:{0}")])
            .build(),
        law("REG-fusion-peleg-outer-univalent", PASS, "δo(R ∗ S) = {(a,∅),(b,∅)} but δo(R) ∗ δo(S) = {(a,{a}),(b,∅)}")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .mrel("D", "X", "X")
            .mrel("E", "X", "X")
            .conds(&["R", "S"], OuterUnivalent)
            .claim("do(R * S) == D && do(R) * do(S) == E")
            .pin(&[("X", 2)], &[("R", "0:{0,1}"), ("S", "0:{0}"), ("D", "0:{} 1:{}"), ("E", "0:{0} 1:{}")])
            .build(),
        law("REG-outer-univalent-alpha", PASS, "α(R ∗ S) = ∅ but α(R) α(S) = {(a,a)} for univalent R, S")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .rel("E", "X", "X")
            .conds(&["R", "S"], OuterUnivalent)
            .claim("a(R * S) == 0 && a(R) ; a(S) == E")
            .pin(&[("X", 2)], &[("R", "0:{0,1}"), ("S", "0:{0}"), ("E", "0:0")])
            .build(),
    ]
}

fn representations() -> Vec<Law> {
    let mrel1 = |id: &str, statement: &str, claim: &str| law(id, T, statement).mrel("R", "X", "Y").claim(claim);
    vec![
        mrel1("L6-cofusion-def", "cfo(R) = ∁δo(∁R)", "cfo(R) == icpl(do(icpl(R)))")
            .sizes(&[("X", 2), ("Y", 3)])
            .build(),
        mrel1("L6-cofission-def", "cfi(R) = ∁δi(∁R)", "cfi(R) == icpl(di(icpl(R)))")
            .sizes(&[("X", 2), ("Y", 3)])
            .build(),
        mrel1("L6-cofission-explicit", "cfi(R) = ↑R ∩ A⋒", "cfi(R) == up(R) & coAt")
            .sizes(&[("X", 2), ("Y", 3)])
            .build(),
        mrel1(
            "L6-cofusion-expansion",
            "cfo(R) = −↓(−↑R ∩ A⋒) ∩ −↑(∁↑R ∩ A⋓)",
            "cfo(R) == -down(-up(R) & coAt) & -up(icpl(up(R)) & At)",
        )
        .sizes(&[("X", 1), ("Y", 3)])
        .build(),
        mrel1(
            "L6-cofusion-expansion-odot",
            "cfo(R) = −↓(−↑R ∩ A⋒) ∩ −↑((↑R ∩ A⋒) ⊙ ∁1)",
            "cfo(R) == -down(-up(R) & coAt) & -up(odot(up(R) & coAt, icpl(1)))",
        )
        .sizes(&[("X", 1), ("Y", 3)])
        .build(),
        law("L6-cofusion-galois", T, "S ⊑↑ cfi(R) ⇔ cfo(S) ⊑↑ R")
            .mrel("R", "X", "Y")
            .mrel("S", "X", "Y")
            .claim("S <u= cfi(R) <=> cfo(S) <u= R")
            .note("the ∁-dual of the ⊑↓ connection between δi and δo")
            .build(),
        mrel1(
            "L6-down-repr",
            "δo(↓δo(R)) = δo(R) and δi(R) = ↓δo(R) ∩ A⋓",
            "do(down(do(R))) == do(R) && di(R) == down(do(R)) & At",
        )
        .sizes(&[("X", 2), ("Y", 3)])
        .build(),
        mrel1("L6-up-repr", "δo(R) = cfo(↑δo(R))", "do(R) == cfo(up(do(R)))").sizes(&[("X", 2), ("Y", 3)]).build(),
        mrel1("L6-cofission-up-cofusion", "cfi(R) = ↑cfo(R) ∩ A⋒", "cfi(R) == up(cfo(R)) & coAt")
            .sizes(&[("X", 2), ("Y", 3)])
            .build(),
        law("NEG-cofission-up-fusion", N, "cfi(R) = ↑δo(R) ∩ A⋒")
            .mrel("R", "X", "Y")
            .claim("cfi(R) == up(do(R)) & coAt")
            .pin(&[("X", 1), ("Y", 2)], &[("R", "0:{0} 0:{1}")])
            .build(),
        law("L6-down-peleg-det", T, "↓(R ∗ S) = R ∗ ↓S = R ∗ (1⋓ ∪ ↓S) = ↓R ∗ ↓S for deterministic S")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .cond("S", OuterDeterministic)
            .claim(
                "down(R * S) == R * down(S) && R * down(S) == R * (ilow | down(S)) && R * down(S) == down(R) * down(S)",
            )
            .build(),
        law("L6-closures-inner-union-det", T, "↓ and ↑ preserve ⋓ of deterministic multirelations")
            .mrel("R", "X", "Y")
            .mrel("S", "X", "Y")
            .conds(&["R", "S"], OuterDeterministic)
            .claim("down(icup(R, S)) == icup(down(R), down(S)) && up(icup(R, S)) == icup(up(R), up(S))")
            .sizes(&[("X", 2), ("Y", 3)])
            .build(),
        law("L6-up-peleg-inner-det", T, "↑(R ∗ S) = ↑R ∗ ↑S for inner deterministic R")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .cond("R", InnerDeterministic)
            .claim("up(R * S) == up(R) * up(S)")
            .build(),
        law("L6-closures-union", T, "↓ and ↑ preserve ∪")
            .mrel("R", "X", "Y")
            .mrel("S", "X", "Y")
            .claim("down(R | S) == down(R) | down(S) && up(R | S) == up(R) | up(S)")
            .build(),
        law("NEG-up-peleg-det", N, "↑(R ∗ S) = ↑R ∗ ↑S for deterministic R, S")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .conds(&["R", "S"], OuterDeterministic)
            .claim("up(R * S) == up(R) * up(S)")
            .pin(&[("X", 2)], &[("R", "0:{} 1:{}"), ("S", "0:{0} 1:{0}")])
            .build(),
        law("NEG-down-peleg-inner-det", N, "↓(R ∗ S) = ↓R ∗ ↓S for inner deterministic R, S")
            .mrel("R", "X", "X")
            .mrel("S", "X", "X")
            .conds(&["R", "S"], InnerDeterministic)
            .claim("down(R * S) == down(R) * down(S)")
            .pin(&[("X", 1)], &[("R", "0:{0}"), ("S", "")])
            .build(),
    ]
}

fn basis() -> Vec<Law> {
    let rel2 = |id: &str, statement: &str, claim: &str| {
        law(id, T, statement).rel("R", "X", "Y").rel("S", "X", "Y").claim(claim).build()
    };
    let mrel1 = |id: &str, statement: &str, claim: &str| law(id, T, statement).mrel("R", "X", "Y").claim(claim).build();
    let mrel2 = |id: &str, statement: &str, claim: &str| {
        law(id, T, statement).mrel("R", "X", "Y").mrel("S", "X", "Y").claim(claim).build()
    };
    let constant = |id: &str, statement: &str, claim: &str| law(id, T, statement).claim(claim).build();
    vec![
        rel2("A-union", "R ∪ S = −(−R ∩ −S)", "R | S == -(-R & -S)"),
        rel2("A-minus", "R − S = R ∩ −S", "R - S == R & -S"),
        law("A-empty", T, "∅ = R ∩ −R").rel("R", "X", "Y").claim("0 == R & -R").build(),
        law("A-universal", T, "U = −∅").rel("R", "X", "Y").claim("U == -(R & -R)").build(),
        mrel1("A-up", "↑R = R ⋓ U", "up(R) == icup(R, U)"),
        constant("A-mem", "∈ = ↑1", "mem[X] == up(1)"),
        constant("A-id", "Id = 1 / 1", "Id[X] == 1 / 1"),
        law("A-converse", T, "R˘ = −(−Id / R)").rel("R", "X", "Y").claim("R^ == -(-Id / R)").build(),
        law("A-compose", T, "S R = −(−S / R˘)")
            .rel("S", "X", "Y")
            .rel("R", "Y", "Z")
            .claim("S ; R == -(-S / R^)")
            .build(),
        law("A-right-residual", T, "R \\ S = (S˘ / R˘)˘")
            .rel("R", "Z", "X")
            .rel("S", "Z", "Y")
            .claim("R \\ S == (S^ / R^)^")
            .build(),
        law("A-syq", T, "syq(R, S) = (R \\ S) ∩ (R˘ / S˘)")
            .rel("R", "Z", "X")
            .rel("S", "Z", "Y")
            .claim("syq(R, S) == (R \\ S) & (R^ / S^)")
            .build(),
        law("A-lambda", T, "Λ(R) = syq(R˘, ∈)").rel("R", "X", "Y").claim("L(R) == syq(R^, mem)").build(),
        law("A-image", T, "P(R) = Λ(∋ R)").rel("R", "X", "Y").claim("Pf(R) == L(mem^ ; R)").build(),
        mrel1("A-kleisli", "R_P = P(R ∋)", "kl(R) == Pf(R ; mem^)"),
        constant("A-mu", "μ = Id_P", "mu[X] == kl(Id)"),
        constant("A-omega", "Ω = ∈ \\ ∈", "Om[X] == mem \\ mem"),
        constant("A-ccomp", "C = syq(∈, −∈)", "Cc[X] == syq(mem, -mem)"),
        mrel1("A-icpl", "∁R = R C", "icpl(R) == R ; Cc"),
        mrel2("A-icap", "R ⋒ S = ∁(∁R ⋓ ∁S)", "icap(R, S) == icpl(icup(icpl(R), icpl(S)))"),
        mrel1("A-down", "↓R = R ⋒ U", "down(R) == icap(R, U)"),
        mrel1("A-convex", "↕R = ↑R ∩ ↓R", "convex(R) == up(R) & down(R)"),
        constant("A-ilow", "1⋓ = 1 ⋒ ∁1", "ilow[X,X] == icap(1, icpl(1))"),
        constant("A-ihigh", "1⋒ = ∁1⋓", "ihigh[X,Y] == icpl(ilow)"),
        mrel1("A-dual", "dual(R) = −∁R", "dual(R) == -icpl(R)"),
        law("A-odot", T, "R ⊙ S = ∁(R ∗ ∁S)")
            .mrel("R", "X", "Y")
            .mrel("S", "Y", "Z")
            .claim("odot(R, S) == icpl(R * icpl(S))")
            .build(),
        mrel1("A-peleg-lift", "R_∗ = (Λ(∋ 1) ∗ 1˘ R 1) μ", "pl(R) == (L(mem[X]^ ; 1) * (1^ ; R ; 1)) ; mu"),
        constant("A-atoms", "A⋓ = U 1", "At[X,Y] == U ; 1"),
        constant("A-coatoms", "A⋒ = ∁A⋓", "coAt[X,Y] == icpl(At)"),
        mrel1("A-nu", "ν(R) = R − 1⋓", "nu(R) == R - ilow"),
        mrel1("A-tau", "τ(R) = R ∩ 1⋓", "tau(R) == R & ilow"),
        mrel1("A-alpha", "α(R) = R ∋", "a(R) == R ; mem^"),
        mrel1("A-fission", "δi(R) = ↓R ∩ A⋓", "di(R) == down(R) & At"),
        mrel1("A-fusion", "δo(R) = 1 R_P", "do(R) == 1 ; kl(R)"),
        mrel1("A-cofission", "cfi(R) = ↑R ∩ A⋒", "cfi(R) == up(R) & coAt"),
        mrel1("A-cofusion", "cfo(R) = ∁δo(∁R)", "cfo(R) == icpl(do(icpl(R)))"),
        law("A-dom", T, "dom(R) = Id ∩ R R˘").rel("R", "X", "Y").claim("dom(R) == Id & R ; R^").build(),
        mrel2("A-smyth", "R ⊑↑ S ⇔ S ⊆ ↑R", "R <u= S <=> S <= up(R)"),
        mrel2("A-hoare", "R ⊑↓ S ⇔ R ⊆ ↓S", "R <d= S <=> R <= down(S)"),
        mrel2("A-egli-milner", "R ⊑↕ S ⇔ R ⊑↓ S ∧ R ⊑↑ S", "R <ud= S <=> (R <d= S && R <u= S)"),
        rel2("A-intersection-via-eta", "R ∩ S = α(R 1 ∩ S 1)", "R & S == a((R ; 1) & (S ; 1))"),
    ]
}
