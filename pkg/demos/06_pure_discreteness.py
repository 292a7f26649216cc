"""Pure discreteness by two routes: overlap classes and balanced pairs.

Run with: python3 demos/06_pure_discreteness.py
"""

from subtiling import cli, spectrum, suspension

for name in ("thue-morse", "fibonacci", "rauzy2-left"):
    spec = cli.corpus_lookup(name)
    sub = spec.substitution()
    system = suspension.SuspensionSystem(sub)
    refs = suspension.left_endpoint_points(system)

    overlap = spectrum.overlap_coincidence(system, refs, system.window(64))
    balanced = spectrum.balanced_pairs(sub)
    verdict = spectrum.spectral_verdict(overlap, balanced)

    print(f"{name}:")
    print(f"  overlap classes: {overlap.certificate.get('total_classes')} "
          f"-> {overlap.status}")
    if overlap.status == "FAILS":
        stuck = overlap.certificate["coincidence_free_closed_set"]
        print(f"  coincidence-free closed set of {len(stuck)} classes, "
              f"replays: "
              f"{spectrum.replay_overlap_certificate(system, overlap.certificate)}")
    print(f"  balanced pairs: {balanced.status} "
          f"({balanced.certificate.get('irreducible_pairs')} pairs, "
          f"bound hit: {balanced.bound_hit})")
    print(f"  spectral verdict: {verdict.status}  [{verdict.agreement}]")
    print()
