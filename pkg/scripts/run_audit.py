"""Write every audit report (formulas, characterizations, statistics, maps,
equidistribution claims, complement conjecture) into one output directory."""

import argparse
import json
import time
from pathlib import Path

from rgfaudit import equi, formulas, maps, stats
from rgfaudit.classify import class_ids, validate_class


def dump(path: Path, obj) -> None:
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj, indent=1), encoding="utf-8")
    print(f"wrote {path}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="reports")
    ap.add_argument("--n-max", type=int, default=8)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    n = args.n_max
    t0 = time.perf_counter()

    card = formulas.audit_all(1, n)
    card.extend(formulas.complement_duality(4, n)).extend(formulas.wilf_pairs(n))
    dump(out / "cardinality.json", card.to_json())
    dump(out / "cardinality.txt", card.table())

    dump(out / "classes.json", [validate_class(c, k).to_dict()
                                for c in class_ids() for k in range(1, n + 1)])
    dump(out / "stat_formulas.json", [t.to_dict() for t in stats.audit(min(n, 8)).values()])
    dump(out / "bijections.json", [maps.verify_bijection(b, k).to_dict()
                                   for b in [*maps.BIJECTIONS, *maps.CONTEXTS]
                                   for k in range(1, n + 1)])
    dump(out / "transports_14_2_3.json", [
        maps.restricted_transport(b, "14/2/3+13/2/4", "14/2/3+1/24/3", n)
        for b in ("F_COMPL", "H_SWAP", "G_SWAP")])
    dump(out / "equidistribution.json",
         {cid: c.to_dict() for cid, c in equi.check_known(n).items()})
    for k, l in ((3, 4), (4, 4)):
        dump(out / f"conjecture_{k}{l}.json", equi.check_conjecture(k, l, n).to_json())
    print(f"done in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
