"""Smoke tests for the python module: build the three deck groups, touch every
exposed operation, and spot-check a few frozen values."""

import json
import sys

import numpy as np

import octaharm as oh


def check(condition, message):
    if not condition:
        raise AssertionError(message)


def main():
    # coordinates
    spinor = oh.point_to_spinor(np.array([0.0, 1.0, 0.0, 0.0]))
    mat = spinor.matrix()
    check(abs(mat[0, 1] + 1j) < 1e-14, "point_to_spinor (0,1,0,0)")
    back = oh.spinor_to_point(spinor)
    check(np.allclose(back, [0, 1, 0, 0], atol=1e-14), "round trip")

    # coxeter closure orders
    check(oh.weyl_closure_order([1, 2, 3, 4]) == 1152, "order 1152")
    check(oh.weyl_closure_order([1, 2, 3]) == 48, "order 48")
    check(oh.cross_check_pair_vs_reflections(1, 2), "conversion cross-check")

    r12 = oh.rotation_pair(1, 2)
    check((r12 * r12 * r12).is_identity(), "3-fold rotation order")

    # deck groups
    decks = {name: oh.build_deck_group(name) for name in ("N4", "N5", "N6")}
    for name, deck in decks.items():
        check(len(deck) == 24, f"{name} order 24")
        centers = deck.centers()
        check(centers.shape == (24, 4), f"{name} centers shape")
        norms = np.linalg.norm(centers, axis=1)
        check(np.allclose(norms, 1.0, atol=1e-12), f"{name} centers on S^3")

    check(decks["N6"].identify()["matched_template"] == "binary_tetrahedral_2_3_3",
          "N6 identification")
    check(decks["N4"].identify()["matched_template"] == "c3_x_q8",
          "N4 identification")
    check(oh.compare_center_sets(decks["N4"], decks["N6"]), "centers match")

    t24 = oh.verify_t24_tables(decks["N6"])
    check(t24["all_pass"], "stored table checks")
    n4s = oh.verify_n4_structure(decks["N4"])
    check(n4s["all_pass"], "N4 structure checks")

    # deck JSON schema
    doc = json.loads(decks["N6"].to_json())
    check(doc["order"] == 24 and len(doc["elements"]) == 24, "deck json")
    check(all(len(el["left"]) == 4 for el in doc["elements"]), "deck json entries")

    # gluing reference data
    gluing = oh.gluing_data("N4")
    check(sorted(f for pair in gluing["faces"] for f in pair) == list(range(1, 9)),
          "gluing faces cover F1..F8")
    check(sorted(abs(e) for row in gluing["edges"] for e in row) == list(range(1, 13)),
          "gluing edges cover 1..12")

    # representation machinery
    g = decks["N5"].elements()[3]
    for two_j in (0, 1, 2, 5):
        d = oh.wigner_d(two_j, g.left)
        check(d.shape == (two_j + 1, two_j + 1), "wigner shape")
        check(np.allclose(d.conj().T @ d, np.eye(two_j + 1), atol=1e-10),
              "wigner unitarity")
    check(abs(oh.su2_character(0, g.left) - 1.0) < 1e-12, "character j=0")

    action = oh.pair_action(2, g)
    check(action.shape == (9, 9), "pair action shape")

    # multiplicities and bases
    for name, deck in decks.items():
        check(oh.multiplicity(0, deck) == 1, f"{name} m(0)")
        check(oh.multiplicity(1, deck) == 0, f"{name} half-integer")
    check(oh.multiplicity(6, decks["N4"]) == 3, "N4 m(j=3)")

    basis = oh.invariant_basis(6, decks["N4"])
    check(basis["vectors"].shape[1] == 3, "numeric basis count")
    closed = oh.n4_closed_form_basis(6)
    check(len(closed["labels"]) == 3, "closed-form labels")
    check(oh.closed_form_matches_projector(6), "span comparison")

    proj = oh.projector(4, decks["N6"])
    check(np.allclose(proj @ proj, proj, atol=1e-9), "projector idempotent")

    # verification entry point (single manifold keeps the smoke test quick)
    report = oh.run_verification(["N6"], 0)
    check(report["all_pass"], "verification N6")
    check("G order 1152: PASS" in report["text"], "verification text")

    print("python smoke: all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
