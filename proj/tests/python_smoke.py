"""Smoke test for the Python bindings (run by ctest with PYTHONPATH set)."""

import tanglebounds as tbp

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def main() -> None:
    assert tbp.canonical_pd("  X(1,4,2,5)\nX(3,6,4,1) X(5,2,6,3) ") == TREFOIL

    assert tbp.jones(TREFOIL) == "1*t^-1 + 1*t^-3 + -1*t^-4"
    s = tbp.jones_summary(TREFOIL)
    assert s["t_l"] == "1"
    assert s["alpha"] == "1"
    assert s["alpha_prime"] == "-1"

    assert tbp.twist_number(TREFOIL) == 1
    assert tbp.writhe(TREFOIL) == -3

    assert tbp.crosscap_torus(2, 3) == 1
    assert tbp.crosscap_torus(3, 4) == 2

    rows = tbp.family_torus(3, 2)
    assert [r["C"] for r in rows] == [2, 3]
    assert all(r["T_L"] <= 2 for r in rows)

    wrows = tbp.family_whitehead(1, cap=16)
    assert wrows[0]["crossings"] == 14
    assert wrows[0]["e_prime"] == 8
    assert wrows[0]["adequate_B"] is True

    assert "jones-oracle" in tbp.suite_names()
    res = tbp.verify_suite("torus-closed-form")
    assert res["pass"], [c for c in res["checks"] if not c["pass"]]

    try:
        tbp.jones("X(1,2,3")
    except Exception:
        pass
    else:
        raise AssertionError("malformed PD must raise")

    print("python bindings ok")


if __name__ == "__main__":
    main()
