"""
Recovering the hypergeometric equation from its singularity data
================================================================

The classical equation z(1-z)w'' + (c-(a+b+1)z)w' - ab w = 0 has regular
singular points at 0, 1 and infinity with exponents {0, 1-c}, {0, c-a-b}
and {a, b}.  Feeding exactly those exponents into the construction must
return exactly that equation, rewritten over psi = z^2 - z:

    w'' + (G/psi) w' + (H/psi^2) w = 0.
"""

from fuchsian import FuchsianEquation, FuchsianInstance, Polynomial, construct, fuchs_defect, verify

# a=1, b=2, c=4: exponents {0, -3} at 0, {0, 1} at 1, {1, 2} at infinity
instance = FuchsianInstance(
    finite_points=[(0, (0, -3)), (1, (0, 1))],
    infinity_exponents=(1, 2),
)

# The exponent sum must hit n - N - 1 = 1 (the Fuchs relation); otherwise
# the construction refuses.
print("exponent-sum defect:", fuchs_defect(instance))

equation = construct(instance)
print("G =", equation.g)  # expect 4z - 4
print("H =", equation.h)  # expect 2z^2 - 2z

# Independent check: Frobenius-style local analysis at every point.
report = verify(equation)
print("verification passes:", report.overall)
for point_report in report.finite:
    print(
        f"  at z={point_report.point}: indicial roots {point_report.indicial.pair}"
        f" (expected {point_report.expected})"
    )
print(f"  at infinity: {report.infinity.indicial.pair}")

# Tampering with a single coefficient is always caught.
tampered = FuchsianEquation(equation.g, Polynomial((1, -2, 2)), instance)
print("tampered H detected:", not verify(tampered).overall)
