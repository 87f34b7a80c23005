"""
Named identity suites shared by the `verify` command and the test suite.

Every suite takes `SuiteOptions` and returns a `VerifyReport` listing each comparison it made. Suites are pure and
deterministic for a fixed seed, so `all` may run them on a thread pool.
"""

import random
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from pydantic import BaseModel, Field

from pystirling.derived import (
    BRepFamily,
    bell_equations_witness,
    brep_check_recurrence,
    brep_recurrence_witness,
    comtet,
    comtet_codiagonal_4,
    comtet_family,
    comtet_special_values_check,
    comtet_via_stirling_a,
    constant_triangle,
    cycle_family,
    cycle_indicator,
    cycle_indicator_via_bell,
    exponential_formula_check,
    forest,
    forest_companion,
    forest_companion_via_trees,
    forest_family,
    forest_via_trees,
    idempotency,
    idempotency_family,
    idempotency_via_bell,
    involution_check,
    involution_poly_self_inverse,
    lah_homogeneity_check,
    lah_signed,
    lah_signed_family,
    lah_signed_via_bell,
    lah_substitution_self_orthogonal,
    lah_unsigned,
    lah_unsigned_family,
    permutation_count_check,
    stirling_a_scaled_check,
    stirling_inversion_round_trip,
)
from pystirling.exceptions import UnknownSuite
from pystirling.extended import (
    basic_reciprocity,
    bell_ext,
    bell_ext_matrix,
    bell_via_assoc,
    combination_reciprocity,
    comtet_thm_c,
    general_reciprocity,
    gould_check,
    melzak,
    potential_reciprocity,
    reciprocity_check,
    schlaefli_check,
    schloemilch_schlaefli,
    schloemilch_schlaefli_general,
    schur_jabotinsky,
    self_reciprocity,
    stirling_a_ext,
)
from pystirling.families import (
    Compose,
    Fixed,
    Placeholder,
    at_series,
    bell,
    bell_derivative_check,
    bell_partition_sum,
    bell_product_rule,
    bell_substitutions_check,
    bell_via_bertrand,
    bell_via_potential,
    companion_representation_check,
    convolution_check,
    fdb_poly,
    first_composition_rule_check,
    geometric,
    inverse_power_check,
    jabotinsky,
    kronecker,
    logarithmic,
    logarithmic_via_potential,
    potential,
    potential_negation_rule,
    potential_product_rule,
    power_of_function_check,
    product_identity_check,
    reciprocal_involution,
    stirling1,
    stirling1_via_potential,
    stirling2,
    stirling_a,
    stirling_a_partition_sum,
    stirling_a_via_assoc_bell,
    stirling_a_via_potential,
    substitution_lemma_check,
    tree_poly_hat,
)
from pystirling.inversion import (
    T,
    FormCase,
    SeriesForm,
    binomial_convolution_check,
    binomial_from_phi,
    binomial_identity_suite,
    both_or_none_check,
    comtet_thm_f,
    comtet_thm_f_self_inverse,
    conversion_round_trip,
    is_binomial,
    knuth_pittel,
    knuth_pittel_sequence,
    knuth_pittel_via_bell,
    knuth_pittel_via_series,
    lagrange_conversion_check,
    lagrange_round_trip,
    lambda_classical,
    lambda_classical_via_full_bell,
    lambda_classical_via_stirling,
    lambda_general,
    lambda_self_inverse,
    lambda_special_identity,
    lambda_special_identity_by_definition,
    lambda_special_unit,
    lambda_special_unit_by_definition,
    mullin_rota_check,
    mullin_rota_connect,
    round_trip_thm_f,
    special_inverse_self_inverse,
    yang_check,
)
from pystirling.logger import logger
from pystirling.polyring import X, MultiPoly, unify
from pystirling.series import (
    LaurentPoly1,
    PowerSeries,
    compose_0case,
    expm,
    identity,
    invert_series,
    iterated_lie_derivative,
    logm,
    random_rational,
    random_sequence,
    random_series,
)
from pystirling.series import geometric as geometric_series
from pystirling.settings import DEFAULT_MAX_N, DEFAULT_SEED, DEFAULT_WORKERS
from pystirling.verification.report import VerifyReport
from pystirling.verification.values import (
    BELL_EXT_MINUS_3_MINUS_5,
    BELL_EXT_RADIUS,
    COMTET_6_2,
    CYCLE_NUMBER_4_2,
    KNUTH_PITTEL_VALUES,
    LAH_SIGNED_ROW_5,
    LAMBDA_2,
    POTENTIAL_2_2,
    PREFERRED_ARRANGEMENTS_3,
    STIRLING2_4_2,
    bell_ext_reference,
    cycle_leading,
)

RANDOM_INVERSIONS = 20
INVERSION_ORDER = 8
THM_F_ORDER = 9
LAGRANGE_MAX_N = 4
GENERAL_FORM_MAX_N = 5
LAH_SUBSTITUTION_MAX_N = 5
POWER_MAX_N = 5
LAH_SCALES = (2, -1, Fraction(1, 3))
MELZAK_POLYNOMIALS: List[List[int]] = [[7], [0, 0, 1], [0, -1, 0, 1], [2, 0, -3, 0, 1], [1, 1, 1, 1, 1, 1]]


class SuiteOptions(BaseModel):
    """
    Parameters of a suite run. `radius` bounds the integer index window -radius..radius of the reciprocity
    suites, `degree`, `m` and `k` select a single Melzak instance.
    """

    max_n: int = Field(default=DEFAULT_MAX_N)
    seed: int = Field(default=DEFAULT_SEED)
    radius: int = Field(default=6)
    workers: int = Field(default=DEFAULT_WORKERS)
    degree: Optional[int] = None
    m: Optional[int] = None
    k: Optional[int] = None


class SuiteName(str, Enum):
    """
    Available verification suites.
    """

    ORTHOGONALITY = "orthogonality"
    ROUTES = "routes"
    MATRIX = "matrix"
    KNOWN_VALUES = "known-values"
    RECIPROCITY = "reciprocity"
    GENERAL_RECIPROCITY = "general-reciprocity"
    LAH = "lah"
    INVERSION = "inversion"
    LAGRANGE = "lagrange"
    COMPOSITION = "composition"
    BINOMIAL = "binomial"
    POTENTIAL = "potential"
    NEGATIVE_CONTROL = "negative-control"
    MELZAK = "melzak"
    ALL = "all"


Suite = Callable[[SuiteOptions], VerifyReport]


def _at(n: int, k: int) -> str:
    return f"n={n}, k={k}"


def _delta(n: int, k: int) -> MultiPoly:
    return MultiPoly.constant(kronecker(n, k))


def _named_families() -> Dict[str, BRepFamily]:
    return {
        "cycle": cycle_family(),
        "forest": forest_family(),
        "lah+": lah_unsigned_family(),
        "lah": lah_signed_family(),
        "comtet": comtet_family(),
    }


def orthogonality_suite(options: SuiteOptions) -> VerifyReport:
    report = VerifyReport(suite=SuiteName.ORTHOGONALITY.value)
    max_n = options.max_n

    for n in range(max_n + 1):
        for k in range(n + 1):
            forward = MultiPoly.zero()
            backward = MultiPoly.zero()
            for j in range(k, n + 1):
                forward = forward + stirling_a(n, j) * bell(j, k)
                backward = backward + bell(n, j) * stirling_a(j, k)
            report.compare("A.B", _at(n, k), forward, _delta(n, k))
            report.compare("B.A", _at(n, k), backward, _delta(n, k))

    families = _named_families()
    families["idempotency"] = idempotency_family()
    rows = min(max_n, GENERAL_FORM_MAX_N)

    for name, family in families.items():
        companion = family.orthogonal()
        for n in range(rows + 1):
            for k in range(n + 1):
                total = MultiPoly.zero()
                for j in range(k, n + 1):
                    total = total + companion.entry(n, j) * family.entry(j, k)
                report.compare(f"companion.{name}", _at(n, k), total, _delta(n, k))

        values = [X(j + 2) for j in range(rows + 1)]
        report.expect(f"stirling-inversion.{name}", f"n<={rows}", stirling_inversion_round_trip(family, values))

    forest_companion_family = forest_family().orthogonal()
    for n in range(rows + 1):
        for k in range(n + 1):
            report.compare("forest-companion", _at(n, k), forest_companion_family.entry(n, k), forest_companion(n, k))
    return report


def routes_suite(options: SuiteOptions) -> VerifyReport:
    report = VerifyReport(suite=SuiteName.ROUTES.value)
    max_n = options.max_n

    for n in range(max_n + 3):
        for k in range(n + 1):
            report.compare("bell.partition-sum", _at(n, k), bell(n, k), bell_partition_sum(n, k))
            report.compare("bell.potential", _at(n, k), bell(n, k), bell_via_potential(n, k))
            report.compare("bell.associate", _at(n, n - k), bell_via_assoc(n, k), bell(n, n - k))
            report.compare("bell.bertrand", _at(n, k), bell_via_bertrand(n, k), bell(n, k))
            report.expect("bell.derivative", _at(n, k), bell_derivative_check(n, k))

    for n in range(max_n + 1):
        for k in range(n + 1):
            expected = stirling_a(n, k)
            report.compare("stirling-a.partition-sum", _at(n, k), stirling_a_partition_sum(n, k), expected)
            report.compare("stirling-a.associate", _at(n, k), stirling_a_via_assoc_bell(n, k), expected)
            report.compare("stirling-a.potential", _at(n, k), stirling_a_via_potential(n, k), expected)
            report.compare("stirling1.potential", _at(n, k), stirling1_via_potential(n, k), stirling1(n, k))
            report.compare("cycle.bell", _at(n, k), cycle_indicator_via_bell(n, k), cycle_indicator(n, k))
            report.compare("idempotency.bell", _at(n, k), idempotency_via_bell(n, k), idempotency(n, k))
            report.expect("stirling-a.bell-representation", _at(n, k), companion_representation_check(n, k))
            if k >= 1:
                report.compare("forest.trees", _at(n, k), forest_via_trees(n, k), forest(n, k))
                report.expect("stirling-a.scaled", _at(n, k), stirling_a_scaled_check(n, k))
                report.compare(
                    "forest-companion.trees", _at(n, k), forest_companion_via_trees(n, k), forest_companion(n, k)
                )

    for n in range(min(max_n, 7) + 1):
        for k in range(n + 1):
            report.compare("comtet.stirling-a", _at(n, k), comtet_via_stirling_a(n, k), comtet(n, k))

    for n in range(5, 10):
        report.compare("comtet.codiagonal-4", f"n={n}", comtet_codiagonal_4(n), comtet(n, n - 4))

    for n in range(1, max_n + 1):
        report.compare("logarithmic.potential", f"n={n}", logarithmic_via_potential(n), logarithmic(n))
        report.compare("lambda.full-bell", f"n={n}", lambda_classical_via_full_bell(n), lambda_classical(n))
        report.compare("lambda.stirling-a", f"n={n}", lambda_classical_via_stirling(n), lambda_classical(n))
        report.compare("knuth-pittel.series", f"n={n}", knuth_pittel_via_series(n), knuth_pittel(n))
        report.compare("knuth-pittel.bell", f"n={n}", knuth_pittel_via_bell(n), knuth_pittel(n))
    return report


def matrix_suite(options: SuiteOptions) -> VerifyReport:  # pylint: disable=unused-argument
    report = VerifyReport(suite=SuiteName.MATRIX.value)
    computed = bell_ext_matrix(BELL_EXT_RADIUS)
    reference = bell_ext_reference()

    for row, n in enumerate(range(-BELL_EXT_RADIUS, BELL_EXT_RADIUS + 1)):
        for column, k in enumerate(range(-BELL_EXT_RADIUS, BELL_EXT_RADIUS + 1)):
            report.compare("bell-ext.matrix", _at(n, k), computed[row][column], reference[row][column])

    report.compare("bell-ext.worked", _at(-3, -5), bell_ext(-3, -5), BELL_EXT_MINUS_3_MINUS_5)
    report.compare("stirling-a-ext.worked", _at(5, 3), stirling_a_ext(5, 3), BELL_EXT_MINUS_3_MINUS_5)
    return report


def known_values_suite(options: SuiteOptions) -> VerifyReport:
    report = VerifyReport(suite=SuiteName.KNOWN_VALUES.value)

    report.compare("potential", _at(2, 2), potential(2, 2), POTENTIAL_2_2)
    for k, expected in LAH_SIGNED_ROW_5.items():
        report.compare("lah", _at(5, k), lah_signed(5, k), expected)
    for n in range(1, max(options.max_n, 1) + 1):
        report.compare("cycle.leading", _at(n, 1), cycle_indicator(n, 1), cycle_leading(n))
    for n, expected in KNUTH_PITTEL_VALUES.items():
        report.compare("knuth-pittel", f"n={n}", knuth_pittel(n), expected)

    report.compare("comtet", _at(6, 2), comtet(6, 2), COMTET_6_2)
    report.compare("lambda", "n=2", lambda_classical(2), LAMBDA_2)
    report.compare("thm-f", "n=1, s=1", comtet_thm_f(1, 1), -X(1))
    report.compare("stirling2", _at(4, 2), stirling2(4, 2), STIRLING2_4_2)
    report.compare("cycle-number", _at(4, 2), unify(comtet(4, 2), 1), CYCLE_NUMBER_4_2)
    for n in range(8):
        for k in range(n + 1):
            report.expect("comtet.special-values", _at(n, k), comtet_special_values_check(n, k))
    report.compare("preferred-arrangements", "n=3", unify(geometric(3), 1), PREFERRED_ARRANGEMENTS_3)
    for n in range(1, 7):
        report.compare("tree", f"n={n}", unify(tree_poly_hat(n), 1), n ** (n - 1))
    return report


def reciprocity_suite(options: SuiteOptions) -> VerifyReport:
    report = VerifyReport(suite=SuiteName.RECIPROCITY.value)
    radius = options.radius

    for n in range(-radius, radius + 1):
        for k in range(-radius, radius + 1):
            report.expect("A-B", _at(n, k), reciprocity_check(n, k))

    for n in range(-radius, radius + 1):
        for k in range(radius + 1):
            report.expect("combinations", _at(n, k), combination_reciprocity(n, k))

    for n in range(min(radius, 7) + 1):
        for k in range(n + 1):
            report.compare("bell-ext.classical", _at(n, k), bell_ext(n, k), bell(n, k))
            report.compare("stirling-a-ext.classical", _at(n, k), stirling_a_ext(n, k), stirling_a(n, k))
    return report


def general_reciprocity_suite(options: SuiteOptions) -> VerifyReport:
    report = VerifyReport(suite=SuiteName.GENERAL_RECIPROCITY.value)
    radius = options.radius

    for name, family in _named_families().items():
        for n in range(-radius, radius + 1):
            for k in range(-radius, radius + 1):
                report.expect(name, _at(n, k), general_reciprocity(family, n, k))
    return report


def lah_suite(options: SuiteOptions) -> VerifyReport:
    report = VerifyReport(suite=SuiteName.LAH.value)
    rows = min(options.max_n, 7)
    signed = lah_signed_family()
    companion = signed.orthogonal()

    for n in range(rows + 1):
        for k in range(n + 1):
            total = MultiPoly.zero()
            for j in range(k, n + 1):
                total = total + lah_signed(n, j) * lah_signed(j, k)
            report.compare("self-orthogonality", _at(n, k), total, _delta(n, k))
            report.compare("companion", _at(n, k), companion.entry(n, k), lah_signed(n, k))
            report.compare("bell-representation", _at(n, k), lah_signed_via_bell(n, k), lah_signed(n, k))
            for t in LAH_SCALES:
                report.expect("homogeneity", f"{_at(n, k)}, t={t}", lah_homogeneity_check(n, k, t))

    radius = min(options.radius, rows)
    for n in range(-radius, radius + 1):
        for k in range(-radius, radius + 1):
            report.expect("self-reciprocity", _at(n, k), self_reciprocity(signed, n, k))

    rng = random.Random(options.seed)
    order = max(1, min(rows, LAH_SUBSTITUTION_MAX_N))
    for trial in range(2):
        h = random_series(rng, order, "invertible")
        report.expect("fdb-substitution", f"trial={trial}", lah_substitution_self_orthogonal(h, order))
    return report


def inversion_suite(options: SuiteOptions) -> VerifyReport:
    report = VerifyReport(suite=SuiteName.INVERSION.value)
    rng = random.Random(options.seed)
    ident = identity(INVERSION_ORDER)

    for trial in range(RANDOM_INVERSIONS):
        f = random_series(rng, INVERSION_ORDER, "invertible")
        inverse = invert_series(f)
        report.compare("inverse.left", f"trial={trial}", compose_0case(inverse, f), ident)
        report.compare("inverse.right", f"trial={trial}", compose_0case(f, inverse), ident)

    for n in range(1, min(options.max_n, 6) + 1):
        report.expect("lambda.self-inverse", f"n={n}", lambda_self_inverse(n))

    for s in (1, 2, 3):
        constants = [Fraction(1)] + random_sequence(rng, THM_F_ORDER)
        report.expect("thm-f.round-trip", f"s={s}", round_trip_thm_f(constants, s, THM_F_ORDER))
        for n in range(1, 5):
            report.expect("thm-f.self-inverse", f"n={n}, s={s}", comtet_thm_f_self_inverse(n, s))

    for s in (1, 2):
        for n in range(1, 5):
            report.expect("special-inverse.self-inverse", f"n={n}, s={s}", special_inverse_self_inverse(n, s))
    return report


def _constants_for(case: FormCase, rng: random.Random, count: int) -> List[Fraction]:
    values = random_sequence(rng, count)
    match case:
        case FormCase.UNIT:
            values[0] = Fraction(0)
            values[1] = random_rational(rng, nonzero=True)
        case FormCase.INVERTIBLE:
            values[0] = random_rational(rng, nonzero=True)
    return values


def lagrange_suite(options: SuiteOptions) -> VerifyReport:
    report = VerifyReport(suite=SuiteName.LAGRANGE.value)
    rng = random.Random(options.seed)
    max_n = min(options.max_n, LAGRANGE_MAX_N)
    order = max_n + 2

    forms = {
        FormCase.UNIT: SeriesForm.of(random_series(rng, order, "unit"), random_series(rng, order, "invertible")),
        FormCase.INVERTIBLE: SeriesForm.of(
            random_series(rng, order, "invertible"), random_series(rng, order, "invertible")
        ),
    }

    for case, form in forms.items():
        report.expect("conversion.round-trip", case.value, conversion_round_trip(form, max_n))

    for source_case, source in forms.items():
        for target_case, target in forms.items():
            witness = f"{source_case.value}/{target_case.value}"
            report.expect("round-trip", witness, lagrange_round_trip(source, target, max_n))
            constants = _constants_for(source_case, rng, max_n + 2)
            report.expect("conversion", witness, lagrange_conversion_check(source, target, constants, max_n))

    phi = random_series(rng, order, "invertible")
    psi = random_series(rng, order, "invertible")
    for n in range(1, min(max_n, 3) + 1):
        witness = f"n={n}"
        report.compare(
            "special.unit", witness, lambda_special_unit(n, phi, psi), lambda_special_unit_by_definition(n, phi, psi)
        )
        report.compare(
            "special.identity",
            witness,
            lambda_special_identity(n, phi, psi),
            lambda_special_identity_by_definition(n, phi, psi),
        )

    plain = SeriesForm.of(PowerSeries.constant(1, order), identity(order))
    for n in range(1, max_n + 1):
        report.compare("classical", f"n={n}", lambda_general(n, plain, plain), lambda_classical(n))
    return report


def composition_suite(options: SuiteOptions) -> VerifyReport:
    report = VerifyReport(suite=SuiteName.COMPOSITION.value)
    rng = random.Random(options.seed)
    max_n = min(max(options.max_n, 1), 6)

    for trial in range(3):
        witness = f"trial={trial}"
        f = random_series(rng, max_n, "any")
        g = random_series(rng, max_n, "f0")
        report.expect("first-rule.0-case", witness, first_composition_rule_check(f, g, max_n))

        laurent = LaurentPoly1({-1: random_rational(rng, nonzero=True), 0: random_rational(rng), 2: 1})
        unit = random_series(rng, max_n, "unit")
        report.expect("first-rule.1-case", witness, first_composition_rule_check(laurent, unit, max_n))

        composite = compose_0case(f, g)
        for n in range(max_n + 1):
            report.compare("fdb", f"{witness}, n={n}", composite.taylor(n), at_series(fdb_poly(f, n), g))

        outer = random_series(rng, max_n, "invertible")
        inner = random_series(rng, max_n, "invertible")
        for n in range(max_n + 1):
            for k in range(n + 1):
                report.expect("jabotinsky", f"{witness}, n={n}, k={k}", jabotinsky(outer, inner, n, k))

        phi = random_series(rng, max_n, "invertible")
        pulled_back = compose_0case(f, invert_series(phi))
        for n in range(max_n + 1):
            lie = iterated_lie_derivative(phi, f, n).coeff(0)
            report.compare("pourchet", f"{witness}, n={n}", lie, pulled_back.taylor(n))

        report.expect("exponential-formula", witness, exponential_formula_check(g, max_n))
        report.expect("involution", witness, involution_check(random_series(rng, max_n, "invertible"), max_n))
        report.expect("substitution-lemma", witness, substitution_lemma_check(f, g, max_n))

        involutive = random_series(rng, max_n, "invertible")
        report.expect("involution.polynomials", witness, involution_poly_self_inverse(involutive, max_n))

        powers = min(max_n, POWER_MAX_N)
        term = Compose(Fixed(random_series(rng, powers, "invertible")), Placeholder(vanishes=True))
        for n in range(1, powers + 1):
            for k in range(1, n + 1):
                report.expect("inverse-power", f"{witness}, n={n}, k={k}", inverse_power_check(term, n, k))
                report.expect("power-of-function", f"{witness}, n={n}, k={k}", power_of_function_check(term, n, k))

    for n in range(min(max_n, 4) + 1):
        report.expect("reciprocal-involution", f"n={n}", reciprocal_involution(n))
        for r in range(-2, 3):
            report.expect("potential-negation", f"n={n}, r={r}", potential_negation_rule(n, r))
            for s in range(-2, 3):
                report.expect("potential-product", f"n={n}, r={r}, s={s}", potential_product_rule(n, r, s))

    for n in range(1, max_n + 1):
        for r in range(3):
            for s in range(3):
                report.expect("bell-product", f"n={n}, r={r}, s={s}", bell_product_rule(n, r, s))

    for n in range(max_n + 1):
        for k in range(n + 1):
            report.expect("bell-substitutions", _at(n, k), bell_substitutions_check(n, k))
        for k in range(-2, 4):
            report.expect("product-identity", _at(n, k), product_identity_check(n, k))

    report.expect("permutation-count", f"n<={max_n}", permutation_count_check(max_n))
    return report


def binomial_suite(options: SuiteOptions) -> VerifyReport:
    report = VerifyReport(suite=SuiteName.BINOMIAL.value)
    rng = random.Random(options.seed)
    max_n = min(max(options.max_n, 1), 5)

    generators = {
        "id": identity(max_n),
        "logm": logm(max_n),
        "expm": expm(max_n),
        "geometric": geometric_series(max_n),
        "random-1": random_series(rng, max_n, "invertible"),
        "random-2": random_series(rng, max_n, "invertible"),
    }
    sequences = {name: binomial_from_phi(phi, max_n) for name, phi in generators.items()}

    for name, seq in sequences.items():
        report.expect("is-binomial", name, is_binomial(seq))
        report.expect("convolution", name, binomial_convolution_check(seq))
        report.expect("yang", name, yang_check(seq))
        report.merge(binomial_identity_suite(seq, max_n))

    names = list(sequences)
    for first, second in zip(names, names[1:]):
        report.expect("mullin-rota", f"{first}/{second}", mullin_rota_check(sequences[first], sequences[second]))

    connection = mullin_rota_connect(sequences["id"], sequences["logm"])
    for n in range(max_n + 1):
        for k in range(n + 1):
            report.compare("mullin-rota.stirling2", _at(n, k), connection[n][k], stirling2(n, k))

    constants = [random_rational(rng, nonzero=True)] + random_sequence(rng, max_n - 1)
    report.expect("both-or-none.binomial", "random", both_or_none_check(sequences["random-1"], constants))
    skewed = [MultiPoly.one(), T] + [T * T * 2 for _ in range(max_n - 1)]
    report.expect("both-or-none.non-binomial", "skewed", both_or_none_check(skewed, constants))
    report.expect("is-binomial.non-binomial", "skewed", not is_binomial(skewed))

    report.expect("knuth-pittel.binomial", f"n<={max_n}", is_binomial(knuth_pittel_sequence(max_n)))
    return report


def potential_suite(options: SuiteOptions) -> VerifyReport:
    report = VerifyReport(suite=SuiteName.POTENTIAL.value)
    max_n = min(options.max_n, 6)

    for n in range(max_n + 1):
        for k in range(n + 1):
            report.compare("schloemilch-schlaefli", _at(n, k), schloemilch_schlaefli(n, k), stirling_a(n, n - k))
            report.expect("schlaefli", _at(n, k), schlaefli_check(n, k))
            report.expect("gould", _at(n, k), gould_check(n, k))

    rows = min(max_n, GENERAL_FORM_MAX_N)
    for name, family in _named_families().items():
        for n in range(rows + 1):
            for k in range(n + 1):
                report.expect(f"schloemilch-schlaefli.{name}", _at(n, k), schloemilch_schlaefli_general(family, n, k))

    order = 2 * max_n + 1
    for name, phi in {"geometric": geometric_series(order), "logm": logm(order), "expm": expm(order)}.items():
        for n in range(1, max_n + 1):
            for k in range(-max_n, n + 1):
                report.expect(f"schur-jabotinsky.{name}", _at(n, k), schur_jabotinsky(phi, n, k))

    for n in range(1, max_n + 1):
        for k in range(-2, n + 1):
            report.expect("potential-reciprocity", _at(n, k), potential_reciprocity(n, k))
    for n in range(-3, 0):
        for k in range(n - 3, n + 1):
            report.expect("potential-reciprocity", _at(n, k), potential_reciprocity(n, k))

    for n in range(max_n + 1):
        for k in range(1, 4):
            report.expect("basic-reciprocity", _at(n, k), basic_reciprocity(n, k))

    for n in range(max_n + 1):
        for r in range(-2, 4):
            for s in range(-2, 4):
                report.expect("convolution", f"n={n}, r={r}, s={s}", convolution_check(n, r, s))

    for n in range(5):
        for m in range(n, 7):
            for k in list(range(1, 5)) + [-(m + 1)]:
                report.expect("thm-c", f"n={n}, k={k}, m={m}", comtet_thm_c(n, k, m))
    return report


def negative_control_suite(options: SuiteOptions) -> VerifyReport:
    report = VerifyReport(suite=SuiteName.NEGATIVE_CONTROL.value)
    max_n = max(options.max_n, 5)

    report.compare("potential.witness", "recurrence", brep_recurrence_witness(potential, max_n), (2, 2))
    report.compare("constant.witness", "bell-equations", bell_equations_witness(constant_triangle, max_n), 4)
    report.expect("constant.recurrence", "recurrence", not brep_check_recurrence(constant_triangle, max_n))

    for name, triangle in {"bell": bell, "cycle": cycle_indicator, "lah+": lah_unsigned, "forest": forest}.items():
        report.expect(f"{name}.recurrence", f"n<={max_n}", brep_check_recurrence(triangle, max_n))
    report.compare("bell.bell-equations", f"n<={max_n}", bell_equations_witness(bell, max_n), None)
    return report


def melzak_suite(options: SuiteOptions) -> VerifyReport:
    report = VerifyReport(suite=SuiteName.MELZAK.value)

    if options.degree is not None and options.m is not None and options.k is not None:
        rng = random.Random(options.seed)
        coefficients = random_sequence(rng, options.degree) + [random_rational(rng, nonzero=True)]
        witness = f"deg={options.degree}, m={options.m}, k={options.k}"
        report.expect("melzak", witness, melzak(coefficients, options.m, options.k))
        return report

    for coefficients in MELZAK_POLYNOMIALS:
        degree = len(coefficients) - 1
        for m in range(degree, degree + 3):
            for k in (1, 2, 5, -(m + 1)):
                witness = f"deg={degree}, m={m}, k={k}"
                report.expect("melzak", witness, melzak(coefficients, m, k))
                report.expect("melzak.sampled", witness, melzak(coefficients, m, k, samples=range(-3, 4)))
    return report


SUITES: Dict[SuiteName, Suite] = {
    SuiteName.ORTHOGONALITY: orthogonality_suite,
    SuiteName.ROUTES: routes_suite,
    SuiteName.MATRIX: matrix_suite,
    SuiteName.KNOWN_VALUES: known_values_suite,
    SuiteName.RECIPROCITY: reciprocity_suite,
    SuiteName.GENERAL_RECIPROCITY: general_reciprocity_suite,
    SuiteName.LAH: lah_suite,
    SuiteName.INVERSION: inversion_suite,
    SuiteName.LAGRANGE: lagrange_suite,
    SuiteName.COMPOSITION: composition_suite,
    SuiteName.BINOMIAL: binomial_suite,
    SuiteName.POTENTIAL: potential_suite,
    SuiteName.NEGATIVE_CONTROL: negative_control_suite,
    SuiteName.MELZAK: melzak_suite,
}


def suite_names() -> List[str]:
    return [name.value for name in SuiteName]


def _resolve(name: str) -> SuiteName:
    try:
        return SuiteName(name)
    except ValueError as exc:
        raise UnknownSuite(suite_names(), name) from exc


def run_all(options: SuiteOptions) -> VerifyReport:
    """
    Runs every suite on a thread pool with `options.workers` threads and merges the reports in registry order.
    """
    report = VerifyReport(suite=SuiteName.ALL.value)

    with ThreadPoolExecutor(max_workers=options.workers) as executor:
        futures = [executor.submit(suite, options) for suite in SUITES.values()]
        for future in futures:
            report.merge(future.result())
    return report


def run_suite(name: str, options: Optional[SuiteOptions] = None) -> VerifyReport:
    """
    Runs a named suite.

    Args:
        name(str): One of `suite_names()`.
        options(SuiteOptions, optional): Parameters of the run. Defaults to `SuiteOptions()`.

    Raises:
        UnknownSuite: If no suite with the given name exists.

    Returns:
        VerifyReport: The merged outcome of every check the suite made.
    """
    suite_name = _resolve(name)
    options = options or SuiteOptions()

    logger.info("Running verification suite %s", suite_name.value)
    if suite_name is SuiteName.ALL:
        report = run_all(options)
    else:
        report = SUITES[suite_name](options)

    logger.info(
        "Suite %s finished with %s checks and %s failures", suite_name.value, report.checks, len(report.failures)
    )
    return report
