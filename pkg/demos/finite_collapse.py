"""On finite spaces every class coincides; count the spaces and show one power space."""

import random

from sobertool import classify, hoare_space
from sobertool.finite import all_t0_spaces, discrete, random_space


def main():
    for n in range(1, 5):
        spaces = list(all_t0_spaces(n))
        sober = sum(classify(X).sober for X in spaces)
        print(f"{n} points: {len(spaces)} T0 spaces, {sober} sober")
    rng = random.Random(1)
    X = random_space(5, rng)
    print("random 5-point space:", X.to_json())
    print("all flags:", {k: v for k, v in classify(X).to_dict().items() if isinstance(v, bool)})
    H = hoare_space(discrete(["a", "b"]))
    print("Hoare space of two discrete points:", H.space.to_json())


if __name__ == "__main__":
    main()
