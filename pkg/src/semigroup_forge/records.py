"""Run records and the enumeration search harness.

A :class:`RunRecord` is the JSON-ready summary of everything the library
computes for one semigroup.  Search output is JSON Lines, one record per line,
each carrying ``"schema": 1``.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from multiprocessing import Pool
from typing import IO, Iterable, Optional

from .enumeration import enumerate_semigroups
from .groebner import Caps
from .semigroup import NumericalSemigroup, make_semigroup, pseudo_frobenius
from .structure import verify_main_theorem
from .tangent_cone import tangent_cone_report

SCHEMA = 1


@dataclass
class RunRecord:
    generators: list[int]
    multiplicity: int
    frobenius: int
    pseudo_frobenius: list[int]
    apery: list[int]
    stretched: Optional[dict]
    main_theorem: dict
    tangent_cone: Optional[dict]
    timing_ms: float
    schema: int = SCHEMA
    redundant: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "RunRecord":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported record schema {data.get('schema')!r}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "RunRecord":
        return cls.from_dict(json.loads(text))

    @property
    def falsifying(self) -> Optional[str]:
        if self.main_theorem.get("falsifying"):
            return self.main_theorem["falsifying"]
        tc = self.tangent_cone
        if tc is not None and tc["cm_formula"] != tc["cm_sally"]:
            return f"tangent cone: formula says {tc['cm_formula']}, Sally's test says {tc['cm_sally']}"
        return None

    @property
    def verdict(self) -> str:
        if self.falsifying:
            return "falsifying"
        mt = self.main_theorem
        if mt["certificate"] is not None:
            cm = "CM" if self.tangent_cone and self.tangent_cone["cm_formula"] else "not CM"
            return f"certified {mt['certificate']['branch']}, {cm}"
        if mt["beyond_hypothesis"] is not None:
            return "outside hypothesis, determinantal anyway"
        return f"outside hypothesis, fails {mt['hypothesis_failure']}"


def build_record(H: NumericalSemigroup, caps: Optional[Caps] = None) -> RunRecord:
    start = time.perf_counter()
    report = verify_main_theorem(H, caps)
    cone = None
    if report.certificate is not None:
        cone = tangent_cone_report(H, report.certificate).to_dict()
    main = report.to_dict()
    elapsed = (time.perf_counter() - start) * 1000.0
    return RunRecord(
        generators=list(H.generators),
        multiplicity=H.multiplicity,
        frobenius=H.frobenius,
        pseudo_frobenius=pseudo_frobenius(H),
        apery=list(H.apery),
        stretched=main["stretched_profile"],
        main_theorem=main,
        tangent_cone=cone,
        timing_ms=round(elapsed, 3),
        redundant=list(H.redundant),
    )


# -- search ---------------------------------------------------------------

@dataclass
class SearchSummary:
    total: int = 0
    verdicts: Counter = field(default_factory=Counter)
    falsifying: list[RunRecord] = field(default_factory=list)

    def add(self, record: RunRecord) -> None:
        self.total += 1
        self.verdicts[record.verdict] += 1
        if record.falsifying:
            self.falsifying.append(record)

    def lines(self) -> list[str]:
        out = [f"{self.total} semigroups"]
        for verdict, count in sorted(self.verdicts.items()):
            out.append(f"  {count:7d}  {verdict}")
        for rec in self.falsifying:
            out.append(f"!! FALSIFYING {rec.generators}: {rec.falsifying}")
        return out


def _worker(args) -> str:
    gens, caps = args
    return build_record(make_semigroup(gens), caps).to_json()


def run_search(max_multiplicity: int, max_frobenius: int, jobs: int = 1,
               out: Optional[IO[str]] = None, caps: Optional[Caps] = None) -> SearchSummary:
    """Analyze every semigroup within the bounds; write JSON lines to ``out``.

    With ``jobs == 1`` lines come in lexicographic order of generator tuples;
    with more workers they come in completion order.
    """
    caps = caps or Caps.from_env()
    tasks = [(H.generators, caps) for H in enumerate_semigroups(max_multiplicity, max_frobenius)]
    summary = SearchSummary()

    def consume(lines: Iterable[str]) -> None:
        for line in lines:
            summary.add(RunRecord.from_json(line))
            if out is not None:
                out.write(line + "\n")

    if jobs <= 1:
        consume(map(_worker, tasks))
    else:
        with Pool(jobs) as pool:
            consume(pool.imap_unordered(_worker, tasks, chunksize=16))
    return summary
