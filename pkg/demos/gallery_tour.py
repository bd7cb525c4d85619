"""Classify every gallery space and show which flags a small finite truncation gets wrong."""

from sobertool import GALLERY_NAMES, classify_symbolic, consistency_sample, make_gallery_space

FLAGS = ("sober", "d_space", "well_filtered", "cut_space", "weakly_sober", "quasisober", "dc", "rudin")


def main():
    header = f"{'space':<22}" + "".join(f"{f[:8]:>10}" for f in FLAGS) + f"{'wd':>14}"
    print(header)
    for name in GALLERY_NAMES:
        report = classify_symbolic(make_gallery_space(name))
        cells = "".join(f"{str(getattr(report, f)):>10}" for f in FLAGS)
        print(f"{name:<22}{cells}{report.wd:>14}")
    print()
    for name in ("L_top", "johnstone_scott"):
        sample = consistency_sample(make_gallery_space(name), 8)
        flags = ", ".join(row["flag"] for row in sample["limit_only_properties"])
        print(f"{name}: truncation agrees with the oracle ({sample['ok']}); limit-only flags: {flags}")


if __name__ == "__main__":
    main()
