"""Built-in example suite with frozen expected values.

`artinv fixtures` runs every check in this module and prints a pass/fail
table. The checks pin concrete numbers (lengths, Hilbert functions, Rees
and Dilworth values, verdicts) for a small zoo of algebras, so the suite
doubles as a regression net over the whole stack. Expected values were
computed independently before the library existed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

from . import invariants as inv
from .algebra import ArtinianAlgebra, is_complete_intersection
from .errors import InputError
from .fields import PrimeField, QQ
from .groebner import buchberger, standard_monomials
from .hilbert import OSequence, is_admissible, macaulay_bound
from .linalg import Subspace
from .poly import RingContext, parse_polynomial


@dataclass(frozen=True)
class FixtureResult:
    name: str
    passed: bool
    detail: str


# ---------------------------------------------------------------------------
# the zoo

@lru_cache(maxsize=None)
def cube(char: int = 2) -> ArtinianAlgebra:
    field = QQ if char == 0 else PrimeField(char)
    return ArtinianAlgebra.from_strings(
        field, ("x", "y", "z"), ("x^2", "y^2", "z^2"))


@lru_cache(maxsize=None)
def six_quadrics() -> ArtinianAlgebra:
    return ArtinianAlgebra.from_strings(
        QQ, ("x", "y", "z", "w"), ("x^2", "y^2", "z^2", "w^2", "x*y", "z*w"))


APOLAR_GENS = ("z^2", "y*z", "x*z", "u*z", "y^2", "x*y", "2*u*y - v*z",
               "x^2", "v*x", "u*x - 2*v*y", "v^3", "u*v^2", "u^2*v", "u^3")
APOLAR_IDEAL_GENS = ("x", "y", "z", "u*v", "u^2", "v^2")


@lru_cache(maxsize=None)
def apolar() -> ArtinianAlgebra:
    return ArtinianAlgebra.from_strings(
        QQ, ("u", "v", "x", "y", "z"), APOLAR_GENS)


TEN_QUADRIC_GENS = ("x1*x3 + x2*x3", "x1*x4 + x2*x4", "x3^2 + x1*x5 - x2*x5",
                    "x4^2 + x1*x5 - x2*x5", "x1^2", "x2^2", "x3*x4",
                    "x3*x5", "x4*x5", "x5^2")


@lru_cache(maxsize=None)
def ten_quadrics() -> ArtinianAlgebra:
    return ArtinianAlgebra.from_strings(
        QQ, ("x1", "x2", "x3", "x4", "x5"), TEN_QUADRIC_GENS)


@lru_cache(maxsize=None)
def tail_family(ell: int = 4) -> ArtinianAlgebra:
    # one-parameter family with Hilbert function (1,3,3,1,...,1)
    gens = ("x1*x2", "x2*x3", "x1^2",
            f"x1*x3^2 - x2^{ell}", f"x3^3 - x2^{ell}")
    return ArtinianAlgebra.from_strings(QQ, ("x1", "x2", "x3"), gens)


@lru_cache(maxsize=None)
def deep_tail_family(ell: int = 4) -> ArtinianAlgebra:
    # sibling family with Hilbert function (1,3,3,1,1)
    gens = ("x1*x2", "x2*x3", f"x1^2 - x3^{ell - 1}",
            f"x1*x3^{ell - 2}", f"x2^3 - x3^{ell}")
    return ArtinianAlgebra.from_strings(QQ, ("x1", "x2", "x3"), gens)


CHAR_FAMILY_GENS = ("x1^2", "x2^2", "x3^2", "x1*x4", "x2*x4", "x3*x4",
                    "x4^2 - x1*x2*x3")


@lru_cache(maxsize=None)
def char_family(char: int = 0) -> ArtinianAlgebra:
    field = QQ if char == 0 else PrimeField(char)
    return ArtinianAlgebra.from_strings(
        field, ("x1", "x2", "x3", "x4"), CHAR_FAMILY_GENS)


@lru_cache(maxsize=None)
def planar_model(extended: bool) -> ArtinianAlgebra:
    gens = ("x^2", "x*y", "y^3") if extended else ("x^2", "x*y", "y")
    return ArtinianAlgebra.from_strings(QQ, ("x", "y"), gens)


def _image_of(algebra: ArtinianAlgebra, element, space) -> Subspace:
    rows = [algebra.multiply(element, row) for row in space.rows]
    return Subspace.from_vectors(algebra.field, algebra.dim, rows)


def _expect(condition: bool, detail: str) -> str:
    if not condition:
        raise AssertionError(detail)
    return detail


# ---------------------------------------------------------------------------
# polynomial and Groebner layer

def check_rational_combination_identity() -> str:
    ctx = RingContext(QQ, ("x1", "x2", "x3"))
    half = ctx.constant(Fraction(1, 2))
    p = parse_polynomial("x1*x2 + x1*x3", ctx)
    q = parse_polynomial("x1*x2 + x2*x3", ctx)
    r = parse_polynomial("x1*x3 + x2*x3", ctx)
    combo = half * p + half * q - half * r
    return _expect(combo == parse_polynomial("x1*x2", ctx),
                   "(p+q-r)/2 collapses to x1*x2")


def check_product_expansion() -> str:
    ctx = RingContext(QQ, ("x1", "x2", "x3"))
    product = parse_polynomial("x1 + x2 + x3", ctx) * parse_polynomial("x3", ctx)
    return _expect(product == parse_polynomial("x1*x3 + x2*x3 + x3^2", ctx),
                   "(x1+x2+x3)*x3 expands to three terms")


def check_relation_parsing() -> str:
    ctx5 = RingContext(QQ, ("u", "v", "x", "y", "z"))
    ctx3 = RingContext(QQ, ("x1", "x2", "x3"))
    a = parse_polynomial("x^2 - 2*v*y", ctx5)
    b = parse_polynomial("x1*x2 + x3^2", ctx3)
    return _expect(len(a.terms) == 2 and len(b.terms) == 2,
                   "two-term relations parse with two terms")


def check_ten_quadrics_standard_monomials() -> str:
    ctx = RingContext(QQ, ("x1", "x2", "x3", "x4", "x5"))
    gb = buchberger([parse_polynomial(s, ctx) for s in TEN_QUADRIC_GENS])
    count = len(standard_monomials(gb).monomials)
    return _expect(count == 12, f"{count} standard monomials")


def check_apolar_standard_monomials() -> str:
    ctx = RingContext(QQ, ("u", "v", "x", "y", "z"))
    gb = buchberger([parse_polynomial(s, ctx) for s in APOLAR_GENS])
    by_degree = standard_monomials(gb).by_degree()
    counts = tuple(len(by_degree[d]) for d in sorted(by_degree))
    return _expect(counts == (1, 5, 5, 1), f"per-degree counts {counts}")


def check_relations_reduce_to_zero() -> str:
    ctx = RingContext(QQ, ("x1", "x2", "x3", "x4", "x5"))
    gb = buchberger([parse_polynomial(s, ctx) for s in TEN_QUADRIC_GENS])
    first = gb.reduce(parse_polynomial("x3^2 + x1*x5 - x2*x5", ctx))
    ctx = RingContext(QQ, ("u", "v", "x", "y", "z"))
    gb = buchberger([parse_polynomial(s, ctx) for s in APOLAR_GENS])
    second = gb.reduce(parse_polynomial("2*u*y - v*z", ctx))
    return _expect(first == first.ctx.zero() and second == second.ctx.zero(),
                   "ideal relations reduce to the zero normal form")


def check_cube_standard_monomial_set() -> str:
    ctx = RingContext(PrimeField(2), ("x", "y", "z"))
    gb = buchberger([parse_polynomial(s, ctx) for s in ("x^2", "y^2", "z^2")])
    got = set(standard_monomials(gb).monomials)
    want = {(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)}
    return _expect(got == want, "standard monomials are the 8 squarefree ones")


def check_planar_model_basis() -> str:
    ctx = RingContext(QQ, ("x", "y"))
    gb = buchberger([parse_polynomial(s, ctx) for s in ("x^2", "x*y", "y")])
    got = set(standard_monomials(gb).monomials)
    return _expect(got == {(0, 0), (1, 0)}, "basis is {1, x}, length 2")


# ---------------------------------------------------------------------------
# algebra layer

def check_lengths() -> str:
    dims = (cube().dim, six_quadrics().dim, ten_quadrics().dim, apolar().dim)
    return _expect(dims == (8, 9, 12, 12), f"lengths {dims}")


def check_apolar_is_local() -> str:
    return _expect(apolar().is_local(), "the quotient is local")


def check_cube_maximal_ideal() -> str:
    algebra = cube()
    ideal = algebra.ideal_from_strings(["x", "y", "z"])
    return _expect(ideal.space.dim == 7
                   and ideal.space.rows == algebra.mpow(1).rows,
                   "variables generate m, dimension 7")


def check_apolar_named_ideal() -> str:
    algebra = apolar()
    ideal = algebra.ideal_from_strings(list(APOLAR_IDEAL_GENS))
    value = inv.mu(algebra, ideal)
    return _expect(value == 6, f"minimal generators: {value}")


def check_six_quadrics_socle() -> str:
    algebra = six_quadrics()
    return _expect(algebra.mpow(3).dim == 0 and algebra.socle().dim == 4,
                   "m^3 = 0 and socle dimension 4")


def check_hilbert_functions() -> str:
    got = (cube().hilbert_function().values,
           ten_quadrics().hilbert_function().values,
           char_family().hilbert_function().values)
    want = ((1, 3, 3, 1), (1, 5, 5, 1), (1, 4, 3, 1))
    return _expect(got == want, f"Hilbert functions {got}")


def check_cube_annihilator() -> str:
    algebra = cube()
    ann = algebra.annihilator(algebra.parse_element("x*y")).space
    y = algebra.parse_element("y")
    return _expect(ann.contains_vector(y)
                   and not algebra.mpow(2).contains(ann),
                   "y kills x*y and the annihilator escapes m^2")


def check_cube_char2_product() -> str:
    algebra = cube()
    product = algebra.multiply(algebra.parse_element("x + y"),
                               algebra.parse_element("x*y + y*z + z*x"))
    return _expect(product == algebra.zero_vector(),
                   "(x+y)(xy+yz+zx) = 2xyz = 0 in characteristic 2")


def check_gorenstein_flags() -> str:
    return _expect(cube().is_gorenstein() and not six_quadrics().is_gorenstein(),
                   "cube Gorenstein, six-quadric algebra not")


def check_complete_intersection_flags() -> str:
    return _expect(is_complete_intersection(cube())
                   and not is_complete_intersection(six_quadrics()),
                   "three squares are a complete intersection, six quadrics not")


def check_quotient_lengths() -> str:
    algebra = cube()
    by_variable = algebra.quotient_length([algebra.parse_element("x")])
    extended = planar_model(extended=True)
    by_y = extended.quotient_length([extended.parse_element("y")])
    return _expect(by_variable == 4 and planar_model(extended=False).dim == 2
                   and by_y == 2,
                   "l(R/xR) = 4 on the cube; planar model gives 2")


def check_chain_models() -> str:
    a = ArtinianAlgebra.from_strings(QQ, ("x", "y"), ("x^2", "x*y", "y"))
    b = ArtinianAlgebra.from_strings(QQ, ("x", "y"),
                                     ("x^3", "x^2*y", "x*y^2", "y"))
    return _expect((a.dim, b.dim) == (2, 3), "model lengths 2 and 3")


# ---------------------------------------------------------------------------
# invariants layer

def check_cube_mu() -> str:
    value = inv.mu(cube(), cube().maximal_ideal())
    return _expect(value == 3, f"mu(m) = {value}")


def check_cube_rees_modes_agree() -> str:
    exhaustive = inv.rees_number(cube(), "exhaustive")
    degree_one = inv.rees_number(cube(), "degree1")
    return _expect(exhaustive.value == 4 and degree_one.value == 4,
                   "both enumeration modes give 4")


def check_ten_quadrics_rees_generic() -> str:
    value = inv.rees_number(ten_quadrics(), "generic").value
    return _expect(value == 5, f"generic-symbolic value {value}")


def check_cube_dilworth_oracle() -> str:
    algebra = cube()
    result = inv.dilworth_oracle(algebra)
    spaces = {ideal.space.rows for ideal in result.maximizers}
    return _expect(result.value == 3
                   and algebra.mpow(1).rows in spaces
                   and spaces == {algebra.mpow(1).rows, algebra.mpow(2).rows},
                   "value 3; maximizers are exactly m and m^2")


def check_dilworth_bounds() -> str:
    got = (inv.dilworth_bounds(cube()), inv.dilworth_bounds(ten_quadrics()))
    registered = apolar().ideal_from_strings(list(APOLAR_IDEAL_GENS))
    with_ideal = inv.dilworth_bounds(apolar(), registered=[registered])
    return _expect(got == ((3, 4), (5, 5)) and with_ideal == (6, 6),
                   f"brackets {got + (with_ideal,)}")


def check_apolar_equality() -> str:
    algebra = apolar()
    ideal = algebra.ideal_from_strings(list(APOLAR_IDEAL_GENS))
    report = inv.mu_quotient_check(algebra, algebra.parse_element("u"), ideal)
    return _expect(report.equality and report.mu_value == 6
                   and report.quotient_length == 6,
                   "both conditions hold; mu = quotient length = 6")


def check_tail_family_equality() -> str:
    algebra = tail_family()
    a = algebra.parse_element("x1 + x2 + x3")
    report = inv.mu_quotient_check(algebra, a, algebra.maximal_ideal())
    return _expect(report.equality and report.mu_value == 3
                   and report.quotient_length == 3,
                   "m*xi = xi*m and mu(m) = l(R/xi R) = 3")


def check_tail_family_witness() -> str:
    algebra = tail_family()
    xi = algebra.parse_element("x1 + x2 + x3")
    image = _image_of(algebra, xi, algebra.mpow(1))
    found = inv.exactness_witness_search(algebra, "degree1")
    return _expect(image.dim == algebra.mpow(2).dim and found is not None,
                   "x1+x2+x3 fills m^2 and the search finds a witness")


def check_char_family_witness_pair() -> str:
    over_q = char_family(0)
    xi = over_q.parse_element("x1 + x2 + x3")
    q_dim = _image_of(over_q, xi, over_q.mpow(1)).dim
    over_f2 = char_family(2)
    xi2 = over_f2.parse_element("x1 + x2 + x3")
    image = _image_of(over_f2, xi2, over_f2.mpow(1)).add(over_f2.mpow(3))
    piece = image.dim - over_f2.mpow(3).dim
    h2 = over_f2.hilbert_function().values[2]
    return _expect(q_dim == over_q.mpow(2).dim and piece == 2 and h2 == 3,
                   "same element fills m^2 over Q but drops to 2 < 3 mod 2")


def check_six_quadrics_criterion() -> str:
    report = inv.sum_of_variables_criterion(six_quadrics())
    return _expect(report.image_dim == 3 and report.m_squared_dim == 4
                   and report.deficit == 1,
                   "sum of variables reaches 3 of 4 dimensions")


def check_cube_has_no_lefschetz_element() -> str:
    algebra = cube()
    failures = 0
    for coeffs in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0),
                   (1, 0, 1), (0, 1, 1), (1, 1, 1)):
        source = " + ".join(v for c, v in zip(coeffs, ("x", "y", "z")) if c)
        report = inv.weak_lefschetz(algebra, algebra.parse_element(source))
        failures += 0 if report.holds else 1
    return _expect(failures == 7, "all 7 degree-1 elements fail")


def check_ten_quadrics_lefschetz_witness() -> str:
    algebra = ten_quadrics()
    xi = algebra.parse_element("x1 - x2 + x3 + x4 + x5")
    report = inv.weak_lefschetz(algebra, xi)
    ranks = tuple(step.rank for step in report.steps)
    attained = algebra.quotient_length([xi])
    return _expect(report.holds and ranks == (1, 5, 1) and attained == 5,
                   "holds with ranks (1,5,1); l(R/xi R) = 5 = max h_i")


def check_generic_lefschetz() -> str:
    return _expect(inv.has_weak_lefschetz_generic(cube(char=0))
                   and inv.has_weak_lefschetz_generic(ten_quadrics()),
                   "generic degree-1 maps have maximal rank")


def check_verdicts() -> str:
    flagship = inv.exactness(cube())
    tail = inv.exactness(tail_family())
    chain = inv.exactness(ArtinianAlgebra.from_strings(QQ, ("x",), ("x^4",)))
    ok = (isinstance(flagship, inv.NotExact)
          and (flagship.dilworth, flagship.rees) == (3, 4)
          and isinstance(tail, inv.Exact) and tail.value == 3
          and isinstance(tail.witness, inv.ElementWitness)
          and isinstance(chain, inv.Exact) and chain.value == 1)
    return _expect(ok, "NotExact(3,4) / Exact(3) / Exact(1)")


# ---------------------------------------------------------------------------
# Hilbert function layer

def check_macaulay_bound_step() -> str:
    value = macaulay_bound(1, 2)
    return _expect(value == 1, "growth after a value of 1 stays at 1")


def check_admissibility() -> str:
    bad = is_admissible((1, 3, 1, 2))
    good = all(is_admissible(seq) for seq in
               ((1, 3, 1, 1), (1, 3, 2, 1), (1, 3, 3, 1), (1, 4, 1, 1)))
    return _expect(not bad and good, "(1,3,1,2) inadmissible, the rest pass")


def check_shape_tags() -> str:
    flagship = OSequence((1, 3, 3, 1))
    stretched = OSequence((1, 4, 1, 1)).shape_tags()
    almost = OSequence((1, 3, 2, 1)).shape_tags()
    neither = flagship.shape_tags()
    ok = (flagship.is_unimodal() and flagship.is_symmetric()
          and not OSequence((1, 3, 3, 1, 1)).is_symmetric()
          and "stretched" in stretched and "almost_stretched" in almost
          and "stretched" not in neither and "almost_stretched" not in neither)
    return _expect(ok, "unimodal/symmetric/stretched tags as expected")


def check_fixture_hilbert_functions_admissible() -> str:
    algebras = (cube(), cube(char=0), six_quadrics(), ten_quadrics(), apolar(),
                tail_family(), deep_tail_family(), char_family(0),
                char_family(2), planar_model(True))
    bad = [str(a.hilbert_function()) for a in algebras
           if not a.hilbert_function().is_admissible()]
    return _expect(not bad, "every fixture Hilbert function is admissible")


def check_deep_tail_family_hilbert() -> str:
    values = deep_tail_family(ell=4).hilbert_function().values
    return _expect(values == (1, 3, 3, 1, 1), f"Hilbert function {values}")


# ---------------------------------------------------------------------------
# report composites

def check_cube_report_values() -> str:
    algebra = cube()
    verdict = inv.exactness(algebra)
    ok = (algebra.dim == 8
          and algebra.hilbert_function().values == (1, 3, 3, 1)
          and algebra.is_gorenstein() and is_complete_intersection(algebra)
          and inv.dilworth_oracle(algebra).value == 3
          and inv.rees_number(algebra).value == 4
          and isinstance(verdict, inv.NotExact))
    return _expect(ok, "length 8, HF (1,3,3,1), Gorenstein CI, D=3, r=4, not exact")


def check_apolar_report_values() -> str:
    algebra = apolar()
    ideal = algebra.ideal_from_strings(list(APOLAR_IDEAL_GENS))
    verdict = inv.exactness(algebra, registered=[ideal])
    ok = (algebra.dim == 12
          and algebra.hilbert_function().values == (1, 5, 5, 1)
          and isinstance(verdict, inv.Exact) and verdict.value == 6)
    return _expect(ok, "length 12, HF (1,5,5,1), Exact(6)")


def check_six_quadrics_report_values() -> str:
    verdict = inv.exactness(six_quadrics())
    ok = (not six_quadrics().is_gorenstein()
          and isinstance(verdict, inv.NotExact)
          and isinstance(verdict.evidence, inv.MonomialCriterionFailure))
    return _expect(ok, "not Gorenstein; NotExact by the monomial screen")


def check_ten_quadrics_report_values() -> str:
    algebra = ten_quadrics()
    bad = inv.exactness_witness_search(algebra, "degree1", cap=None)
    xi_fail = _image_of(algebra, algebra.parse_element(
        "x1 + x2 + x3 + x4 + x5"), algebra.mpow(1)).dim
    verdict = inv.exactness(algebra)
    ok = (bad is not None and xi_fail < algebra.mpow(2).dim
          and isinstance(verdict, inv.Exact) and verdict.value == 5)
    return _expect(ok, "all-ones element fails, a signed one works, Exact(5)")


CHECKS: Tuple[Tuple[str, Callable[[], str]], ...] = (
    ("rational_combination_identity", check_rational_combination_identity),
    ("product_expansion", check_product_expansion),
    ("relation_parsing", check_relation_parsing),
    ("ten_quadrics_standard_monomials", check_ten_quadrics_standard_monomials),
    ("apolar_standard_monomials", check_apolar_standard_monomials),
    ("relations_reduce_to_zero", check_relations_reduce_to_zero),
    ("cube_standard_monomial_set", check_cube_standard_monomial_set),
    ("planar_model_basis", check_planar_model_basis),
    ("lengths", check_lengths),
    ("apolar_is_local", check_apolar_is_local),
    ("cube_maximal_ideal", check_cube_maximal_ideal),
    ("apolar_named_ideal", check_apolar_named_ideal),
    ("six_quadrics_socle", check_six_quadrics_socle),
    ("hilbert_functions", check_hilbert_functions),
    ("cube_annihilator", check_cube_annihilator),
    ("cube_char2_product", check_cube_char2_product),
    ("gorenstein_flags", check_gorenstein_flags),
    ("complete_intersection_flags", check_complete_intersection_flags),
    ("quotient_lengths", check_quotient_lengths),
    ("chain_models", check_chain_models),
    ("cube_mu", check_cube_mu),
    ("cube_rees_modes_agree", check_cube_rees_modes_agree),
    ("ten_quadrics_rees_generic", check_ten_quadrics_rees_generic),
    ("cube_dilworth_oracle", check_cube_dilworth_oracle),
    ("dilworth_bounds", check_dilworth_bounds),
    ("apolar_equality", check_apolar_equality),
    ("tail_family_equality", check_tail_family_equality),
    ("tail_family_witness", check_tail_family_witness),
    ("char_family_witness_pair", check_char_family_witness_pair),
    ("six_quadrics_criterion", check_six_quadrics_criterion),
    ("cube_has_no_lefschetz_element", check_cube_has_no_lefschetz_element),
    ("ten_quadrics_lefschetz_witness", check_ten_quadrics_lefschetz_witness),
    ("generic_lefschetz", check_generic_lefschetz),
    ("verdicts", check_verdicts),
    ("macaulay_bound_step", check_macaulay_bound_step),
    ("admissibility", check_admissibility),
    ("shape_tags", check_shape_tags),
    ("fixture_hilbert_functions_admissible",
     check_fixture_hilbert_functions_admissible),
    ("deep_tail_family_hilbert", check_deep_tail_family_hilbert),
    ("cube_report_values", check_cube_report_values),
    ("apolar_report_values", check_apolar_report_values),
    ("six_quadrics_report_values", check_six_quadrics_report_values),
    ("ten_quadrics_report_values", check_ten_quadrics_report_values),
)


def run_fixtures(names: Optional[Sequence[str]] = None) -> List[FixtureResult]:
    """Run the checks (all, or the named subset) and collect results."""
    if names is None:
        selected = CHECKS
    else:
        known = {name for name, _ in CHECKS}
        unknown = sorted(set(names) - known)
        if unknown:
            raise InputError("unknown check name(s): " + ", ".join(unknown))
        wanted = set(names)
        selected = tuple(item for item in CHECKS if item[0] in wanted)
    results = []
    for name, fn in selected:
        try:
            results.append(FixtureResult(name, True, fn()))
        except Exception as exc:  # a failed expectation, not a crash
            results.append(FixtureResult(name, False, str(exc)))
    return results
