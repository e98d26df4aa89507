from umbral import MultiPoly


def upoly(coeffs, var):
    """Univariate polynomial from a constant-first coefficient list."""
    return MultiPoly({((var, k),): c for k, c in enumerate(coeffs) if c != "0"})
