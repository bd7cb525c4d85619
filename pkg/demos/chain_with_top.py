"""
Walk through the chain of naturals with a top added, step by step.

The naturals are irreducible and closed but have no greatest element, and the
only cut containing them is the whole space. Adding a new top under the old
one gives the sobrification. Mapping into the naturals with two tops then
forces a discontinuous extension, so no reflection into the cut, weakly sober
or quasisober spaces exists.
"""

from sobertool import (is_K_neg, make_gallery_space, natural_top, refute_extension, revalidate,
                       sobrification_iso_check)
from sobertool.verify import chain_into_two_tops


def main():
    L = make_gallery_space("L_top")
    W = make_gallery_space("N_two_tops")
    print("greatest element:", L.greatest_in(L.all))
    print("cut closure of the naturals:", L.label(L.cut_closure(L.nat())))
    for class_name in ("cut", "weakly_sober", "quasisober"):
        print(f"negative conditions for {class_name}:", is_K_neg(L, class_name).conditions)

    ext = natural_top(L)
    cert = sobrification_iso_check(L, ext)
    print("sobrification certificate:", cert.checks)

    refutation = refute_extension(L, ext, W, chain_into_two_tops(L, W))
    print("refutation kind:", refutation.kind)
    print("failing closed set:", refutation.contradiction["preimage_not_closed"])
    for row in refutation.contradiction["failures"]:
        print("   ", row["closed"], "pulls back to", row["preimage"])
    print("independent recheck:", revalidate(refutation))


if __name__ == "__main__":
    main()
