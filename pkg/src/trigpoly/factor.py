"""The Goh-Wildberger factorization battery for zpread polynomials.

The conjecture: there are integer polynomials Phi_d, deg Phi_d = phi(d),
with Z_n = prod_{d | n} Phi_d for every n; for d >= 3 each Phi_d is the
square of an integer polynomial psi_d with psi_d(0) > 0, psi_d(0) equals
the prime-power kernel of d, and psi_p(1) = (-1)^(phi(p)/2) for primes
p >= 5.  This module computes the factor system by exact divisor-order
division (so any failure of the conjecture is a loud, located error) and
runs every check as exact integer arithmetic, including golden-ratio
fixed-point evaluations in Z[phi].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .checks import CheckReport
from .combinatorics import a014963, divisors, is_prime, moebius, pyramidal, totient
from .poly import NotASquare, NotDivisible, Poly, exact_div, sqrt_exact
from .rings import GoldenInt
from .spread import zpread_family


class ConjectureViolation(ArithmeticError):
    def __init__(self, n: int, reason: str):
        super().__init__(f"conjecture fails at {n}: {reason}")
        self.n = n
        self.reason = reason


@dataclass
class FactorTable:
    max_n: int
    phi: dict[int, Poly]
    psi: dict[int, Poly] = field(default_factory=dict)
    zpread: list[Poly] = field(default_factory=list)


def build_factor_table(max_n: int) -> FactorTable:
    """Phi_1 = Z_1 = x and Phi_n = Z_n / prod_{d | n, d < n} Phi_d.

    Each division is exact in Z[x] or the construction aborts with
    ConjectureViolation, which would disprove the integrality part of the
    conjecture at that index.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    z = zpread_family(max_n)
    phi: dict[int, Poly] = {}
    for n in range(1, max_n + 1):
        rem = z[n]
        for d in divisors(n)[:-1]:
            try:
                rem = exact_div(rem, phi[d])
            except NotDivisible as exc:
                raise ConjectureViolation(n, f"not divisible by Phi_{d} ({exc})")
        phi[n] = rem
    return FactorTable(max_n, phi, zpread=z)


def extract_psi(table: FactorTable) -> FactorTable:
    """psi_d = sqrt(Phi_d) with psi_d(0) > 0, for every d >= 3."""
    for d in range(3, table.max_n + 1):
        try:
            table.psi[d] = sqrt_exact(table.phi[d])
        except NotASquare as exc:
            raise ConjectureViolation(d, f"not a perfect square ({exc})")
    return table


def _moebius_product(d: int) -> Fraction:
    """prod over divisors e of d of (d/e)^mu(e); equals the prime-power
    kernel of d."""
    out = Fraction(1)
    for e in divisors(d):
        mu = moebius(e)
        if mu == 1:
            out *= Fraction(d, e)
        elif mu == -1:
            out /= Fraction(d, e)
    return out


@dataclass
class BatteryReport:
    report: CheckReport
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.report.ok


def run_conjecture_battery(table: FactorTable) -> BatteryReport:
    """All per-divisor checks over the built table.

    Asserted: reconstruction (prod Phi_d = Z_n), the degree law
    deg Phi_d = phi(d) and its divisor sum, psi_d(0) and its Moebius
    product form, the prime sign psi_p(1), and the reflection
    Phi_2p(x) = Phi_p(4 - x).  The reflection in the alternative 2 - x
    coordinate is evaluated and reported, not asserted; irreducibility of
    psi_d is out of scope and reported as not tested.
    """
    report = CheckReport(f"factorization battery n<={table.max_n}")
    notes: list[str] = []

    for n in range(1, table.max_n + 1):
        product = Poly((1,))
        for d in divisors(n):
            product = product * table.phi[d]
        report.record(product == table.zpread[n], "reconstruction", n,
                      "product of factors != Z_n")
        degree_sum = sum(table.phi[d].degree() for d in divisors(n))
        report.expect_equal(degree_sum, n, "degree divisor sum", n)

    for d in range(1, table.max_n + 1):
        report.expect_equal(table.phi[d].degree(), totient(d),
                            "deg Phi = totient", d)
    for d in range(3, table.max_n + 1):
        psi = table.psi[d]
        report.record(psi(0) > 0, "psi(0) > 0", d, f"psi({d})(0) = {psi(0)}")
        report.expect_equal(psi(0), a014963(d), "psi(0) = prime-power kernel", d)
        report.expect_equal(Fraction(psi(0)), _moebius_product(d),
                            "psi(0) = Moebius product", d)

    for p in range(5, table.max_n + 1):
        if is_prime(p):
            report.expect_equal(table.psi[p](1), (-1) ** (totient(p) // 2),
                                "psi_p(1) sign", p)

    reflect4 = Poly((4, -1))
    reflect2 = Poly((2, -1))
    printed_holds = 0
    printed_total = 0
    for p in range(3, table.max_n // 2 + 1):
        if not is_prime(p):
            continue
        report.expect_equal(table.phi[p].compose(reflect4), table.phi[2 * p],
                            "reflection Phi_2p(x) = Phi_p(4-x)", p)
        printed_total += 1
        if table.phi[2 * p].compose(reflect2) == table.phi[p]:
            printed_holds += 1
    notes.append(
        f"alternative reflection Phi_p(x) = Phi_2p(2-x): holds for "
        f"{printed_holds} of {printed_total} odd primes p with 2p <= "
        f"{table.max_n} (reported, not asserted)")
    notes.append("irreducibility of psi_d: not tested")
    return BatteryReport(report, notes)


def golden_fixed_points(max_n: int) -> CheckReport:
    """Exact fixed-point pattern of the zpread values at 2, 3 and 2 + phi.

    Evaluation runs the defining recursion Z_n(v) = (2 - v) Z_{n-1}(v)
    - Z_{n-2}(v) + 2v directly in the ring (int or Z[phi]), so every
    comparison is exact.

      Z_n(2) = 2          iff n odd
      Z_n(3) = 3          iff n = 1, 2 mod 3
      Z_n(2+phi) = 2+phi  iff n = 1, 4 mod 5
      Z_n(2+phi) = 3-phi  iff n = 2, 3 mod 5
    """
    report = CheckReport(f"golden fixed points n<={max_n}")
    golden = GoldenInt(2, 1)
    other = GoldenInt(3, -1)
    values = {2: (0, 2), 3: (0, 3), golden: (GoldenInt(0), golden)}
    for v, (prev2, prev1) in values.items():
        a, b = prev2, prev1
        for n in range(1, max_n + 1):
            if n == 1:
                z = b
            else:
                a, b = b, (2 - v) * b - a + 2 * v
                z = b
            if v == 2:
                report.record((z == 2) == (n % 2 == 1), "fixed point at 2", n,
                              f"Z_{n}(2) = {z}")
            elif v == 3:
                report.record((z == 3) == (n % 3 in (1, 2)), "fixed point at 3",
                              n, f"Z_{n}(3) = {z}")
            else:
                report.record((z == golden) == (n % 5 in (1, 4)),
                              "fixed point at 2+phi", n, f"Z_{n}(2+phi) = {z}")
                report.record((z == other) == (n % 5 in (2, 3)),
                              "swap point 3-phi", n, f"Z_{n}(2+phi) = {z}")
    return report


def pyramidal_column_report(table: FactorTable) -> str:
    """Compare |coefficients of psi_d| with the staggered pyramidal-array
    column indexed by phi(d) - mu(d).

    Column c of the array (rows p^[2], p^[3], ..., row r starting at
    offset r) reads top-down as p^[r+2]_{(c-2-r)/2} for r = (c-2) mod 2,
    ..., c-2; its bottom entry is 1 and aligns with the leading
    coefficient of psi_d.  This is an exploratory report with no
    assertions; positions are compared from the leading end down and
    leftovers are listed.
    """
    lines = ["pyramidal column comparison (exploratory, no assertions)"]
    for d in range(3, table.max_n + 1):
        psi = table.psi.get(d)
        if psi is None:
            continue
        c = totient(d) - moebius(d)
        m = c - 2
        column = [pyramidal(r + 2, (m - r) // 2)
                  for r in range(m % 2, m + 1, 2)]
        tail = [abs(psi[j]) for j in range(1, psi.degree() + 1)]
        pairs = min(len(column), len(tail))
        matches, mismatches = [], []
        for offset in range(1, pairs + 1):
            a = tail[-offset]
            b = column[-offset]
            (matches if a == b else mismatches).append(
                f"x^{len(tail) - offset + 1}:{a}{'' if a == b else '!=' + str(b)}")
        extra_psi = len(tail) - pairs
        extra_col = len(column) - pairs
        bits = [f"d={d}", f"column {c}",
                f"matched {len(matches)}/{pairs}"]
        if mismatches:
            bits.append("mismatch " + ",".join(reversed(mismatches)))
        if extra_psi:
            bits.append(f"{extra_psi} low psi coefficient(s) unmatched "
                        f"(plus the constant {psi[0]})")
        else:
            bits.append(f"constant {psi[0]} outside the column")
        if extra_col:
            bits.append(f"{extra_col} column entries unmatched")
        lines.append("  " + "  ".join(bits))
    return "\n".join(lines)


def format_table(table: FactorTable) -> str:
    lines = []
    for d in range(1, table.max_n + 1):
        line = f"Phi_{d} = {table.phi[d]}"
        if d in table.psi:
            line += f"  (= ({table.psi[d]})^2)"
        lines.append(line)
    return "\n".join(lines)


def suite(max_n: int) -> list[CheckReport]:
    table = extract_psi(build_factor_table(max_n))
    battery = run_conjecture_battery(table)
    return [battery.report, golden_fixed_points(max_n)]
