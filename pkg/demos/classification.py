"""Symbolic classification: isolated points, components, and asymptotic
dimension of the logarithmic subgroup space, from structural descriptors."""

from balleans import asdim_classify, component_census, iso_points_classify
from balleans.groups import (
    CardinalToken,
    descriptor_finite_sylow,
    descriptor_free,
    descriptor_prufer_sum,
    descriptor_rationals,
)


def main() -> None:
    fixtures = [
        ("Z", descriptor_free(1)),
        ("Q", descriptor_rationals(1)),
        ("Q^2", descriptor_rationals(2)),
        ("Q^(omega)", descriptor_rationals(CardinalToken.omega())),
        ("Prufer 2-group", descriptor_prufer_sum({2: 1})),
        ("Prufer 2+3+5 sum", descriptor_prufer_sum({2: 1, 3: 1, 5: 1})),
        ("Prufer 2-group squared", descriptor_prufer_sum({2: 2})),
        ("torsion, Sylow orders 8 and 9", descriptor_finite_sylow({2: 8, 3: 9})),
    ]
    print("group                          | iso points | asdim of log-space")
    print("-" * 68)
    for name, d in fixtures:
        iso = iso_points_classify(d)
        asdim = asdim_classify(d)
        print(f"{name:<30} | {str(iso.size):>10} | {asdim.to_json()}")

    print("\n== connected-component censuses ==")
    for census in (component_census("Z^n", n=1),
                   component_census("Z^n", n=3),
                   component_census("prufer", prime=2),
                   component_census("finite_abelian")):
        print(f"  {census.family}: {census.count} — {census.detail}")


if __name__ == "__main__":
    main()
