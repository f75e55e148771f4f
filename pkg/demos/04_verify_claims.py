"""Run the claim-verification harness and read its findings.

Every registered identity is evaluated on desk-scale instances under both
witness rules.  A FAIL row means exhaustive enumeration disagrees with the
closed form on that instance; the per-claim summary names the witness rule
when a claim only holds under one of them.
"""

from semitotal import run_claims


def main() -> None:
    report = run_claims("T1.*", budget=12)
    print(report.to_table())

    print("rule sensitivity across the whole registry (budget 10):")
    full = run_claims("*", budget=10)
    for cid, info in full.summary().items():
        if info["passing_rule"]:
            print(f"  {cid:<20} holds only under {info['passing_rule']}")
    print()
    print("sample findings (formula vs oracle):")
    shown = 0
    for row in full.rows:
        if row.verdict == "FAIL" and shown < 8:
            print(f"  {row.claim:<18} {row.instance:<22} {row.rule:<8} "
                  f"predicted {row.predicted}, oracle {row.oracle}")
            shown += 1


if __name__ == "__main__":
    main()
