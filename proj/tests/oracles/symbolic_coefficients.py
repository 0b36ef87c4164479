"""Expands the four cleared numerators with sympy and writes their nu-coefficients.

Output format matches qturan::read_snapshot: "[family]" headers, then "j: coeff" lines
with coefficients as polynomials in pi.
"""

import sys
from collections import defaultdict
from fractions import Fraction

import sympy as sp

nu, P = sp.symbols("nu pi", positive=True)
R = sp.Rational

E_I = 1 - R(3, 8) / nu - R(15, 128) / nu**2 - R(105, 1024) / nu**3 - R(4725, 32768) / nu**4 - R(72765, 262144) / nu**5
E_Q = 1 - P**4 / (36 * nu**3) + P**4 / (12 * nu**4) - P**4 / (32 * nu**5)
S_minus = nu**2 - P**2 / 3
S_plus = nu**2 + P**2 / 3


def upper_shift(side):
    return nu + side * P**2 / (6 * nu) - P**4 / (72 * nu**3) + side * P**6 / (432 * nu**5)


def lower_shift(side):
    return upper_shift(side) - 5 * P**8 / (5184 * nu**7)


def F(S, u, c):
    return (S**3 - R(3, 8) * S**2 * u - R(15, 128) * S**2 - R(105, 1024) * S * u
            - R(4725, 32768) * S - R(72765, 262144) * u + c)


def numerators():
    cubes = S_minus**3 * S_plus**3
    slack = 31 / nu**6
    a = (32 * nu**20 * F(S_minus, upper_shift(-1), -31) * F(S_plus, upper_shift(1), -31)
         - (32 * nu**6 - P**4 * nu - 4128) * (E_I + slack)**2 * nu**14 * cubes)
    b = ((32 * nu**6 - P**4 * nu + 3872) * (E_I - slack)**2 * nu**14 * cubes
         - 32 * nu**20 * F(S_minus, lower_shift(-1), 31) * F(S_plus, lower_shift(1), 31))
    low = ((1 + P**4 / (12 * nu**4) + R(7, 864) * P**8 / nu**8)
           * (1 - P**4 / (36 * nu**3) - R(5, 2592) * P**8 / nu**7)
           * (1 - P**4 / (32 * nu**5) - 129 / nu**6) * (1 - 5 / nu**6))
    high = ((1 + P**4 / (12 * nu**4) + P**8 / (123 * nu**8))
            * (1 - P**4 / (36 * nu**3) + P**8 / (1296 * nu**6))
            * (1 - P**4 / (32 * nu**5) + 121 / nu**6) * (1 + 5 / nu**6))
    c = 71663616 * nu**27 * (low - (E_Q - 135 / nu**6))
    d = -20404224 * nu**26 * (high - (E_Q + (126 + P**8 / 1296) / nu**6))
    return {"a": a, "b": b, "c": c, "d": d}


def coefficients(expr):
    table = defaultdict(lambda: defaultdict(Fraction))
    for term, coeff in sp.expand(expr).as_coefficients_dict().items():
        powers = term.as_powers_dict()
        j = int(powers.get(nu, 0))
        k = int(powers.get(P, 0))
        table[j][k] += Fraction(int(sp.numer(coeff)), int(sp.denom(coeff)))
    return table


def render(poly):
    parts = []
    for k in sorted(poly):
        c = poly[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        text = str(mag) if k == 0 else f"{mag}*pi^{k}"
        parts.append((sign, text))
    if not parts:
        return "0"
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


def main(path):
    lines = ["# sympy expansion of the cleared numerators"]
    for family, expr in numerators().items():
        table = coefficients(expr)
        lines.append(f"[{family}]")
        for j in range(min(table), max(table) + 1):
            lines.append(f"{j}: {render(table.get(j, {}))}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "symbolic_coefficients.txt")
