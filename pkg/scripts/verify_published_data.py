"""Recompute every published table and Chern class and report agreement.

Checks the B_0..B_4 integration tables, the gluing of c(E) (with the
integer w), the fallback route through the printed c(N_B4 V4), and the
derived c(N_B4 V4) itself.  Exits non-zero on any disagreement.
"""

import sys

from cubicchar import centers as C


def check(label, fn):
    try:
        detail = fn()
    except C.DataInconsistencyError as exc:
        print(f"FAIL  {label}: {exc}")
        for mono, (want, got) in sorted(exc.diff.items())[:20]:
            print(f"        {mono}: published {want}, computed {got}")
        return False
    print(f"ok    {label}" + (f"  ({detail})" if detail else ""))
    return True


def tables():
    for i in range(5):
        C.check_published_table(C.build_center(i, 3, verify=False))
    return "B0..B4"


def gluing():
    E, data = C.glue_chern_E(3)
    return f"w = {data.w}; c(E) = {E.total_chern}"


def fallback():
    chow = C.build_center(3, 3).chow
    if not chow.equal(C.chern_E_fallback(3).total_chern, C.chern_E(3).total_chern):
        raise C.DataInconsistencyError("fallback c(E) differs from the glued class")
    return "both routes agree in A(B3)"


def normal_b4():
    derived = C.derive_c_N_B4(3, verify=False)
    C.compare_c_N_B4(derived)
    return f"{len(C.printed_c_N_B4())} printed terms matched"


def main():
    results = [check("integration tables", tables), check("gluing of c(E)", gluing),
               check("fallback c(E)", fallback), check("c(N_B4 V4)", normal_b4)]
    sys.exit(0 if all(results) else 2)


if __name__ == "__main__":
    main()
