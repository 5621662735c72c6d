"""Print the small-weight dimension table for ranks 3..8 next to dim sp(n)."""
import argparse

from quatlie.weights import CLOSED_FORMS, closed_form_weight, sp_dim, weyl_dim


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ranks", default="3-8", help="range lo-hi")
    args = ap.parse_args()
    lo, hi = (int(x) for x in args.ranks.split("-"))
    labels = list(CLOSED_FORMS)
    print("n".rjust(3), "sp(n)".rjust(7), *(lab.rjust(8) for lab in labels))
    for n in range(lo, hi + 1):
        row = [weyl_dim(closed_form_weight(lab, n)) for lab in labels]
        print(str(n).rjust(3), str(sp_dim(n)).rjust(7), *(str(d).rjust(8) for d in row))


if __name__ == "__main__":
    main()
