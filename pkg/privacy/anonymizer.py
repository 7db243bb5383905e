# -*- coding: utf-8 -*-
"""
Full-domain generalization search with class-granular suppression.

The anonymizer walks the generalization lattice of the quasi-identifiers.
For every node it generalizes the table, suppresses the classes that break
the requested constraints and scores the result with ``information_loss``.
The feasible node with the smallest loss wins; ties go to the smallest level
sum, then to the lexicographically smallest level vector.

Nodes are evaluated in batches of equal level sum. A node that is feasible
without suppressing anything dominates all of its ancestors (component-wise
greater level vectors): their loss is at least as high and they lose every
tie-break, so they are skipped.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import groupby, product
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from core.errors import InfeasibleAnonymizationError, SchemaError
from core.generalization import generalize_table, generalized_schema
from core.hierarchy import GeneralizationHierarchy, IdentityHierarchy
from core.partition import EquivalenceClass, Partition, partition_by_qid
from core.table import AttributeRole, AttributeSchema, Table
from privacy.models import (
    TOLERANCE,
    TOTAL_VARIATION,
    ModelVerdict,
    check_all,
    sensitive_distribution,
    total_variation_distance,
    earth_movers_distance,
)

logger = logging.getLogger(__name__)

Levels = Tuple[int, ...]


@dataclass(frozen=True)
class AnonymizationConstraints:
    """Constraints enforced by ``anonymize``: k always, l and t optionally."""

    k: int
    l: Optional[int] = None
    t: Optional[float] = None
    sensitive: Optional[str] = None
    distance: str = TOTAL_VARIATION

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if (self.l is not None or self.t is not None) and not self.sensitive:
            raise SchemaError("l-diversity and t-closeness constraints need a 'sensitive' attribute")

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "AnonymizationConstraints":
        return cls(
            k=int(data.get("k", 1)),
            l=None if data.get("l") is None else int(data["l"]),
            t=None if data.get("t") is None else float(data["t"]),
            sensitive=data.get("sensitive"),
            distance=data.get("distance") or TOTAL_VARIATION,
        )

    def as_mapping(self) -> Dict[str, Any]:
        return {"k": self.k, "l": self.l, "t": self.t, "sensitive": self.sensitive, "distance": self.distance}


@dataclass(frozen=True)
class LatticeNode:
    """One generalization level per quasi-identifier, with its evaluation."""

    levels: Levels
    loss: float = 0.0
    feasible: bool = False
    suppressed_count: int = 0

    def as_mapping(self, qid: Sequence[str]) -> Dict[str, int]:
        return dict(zip(qid, self.levels))


@dataclass(frozen=True)
class AnonymizationResult:
    """Published table and the node that produced it."""

    output_table: Table
    chosen_node: LatticeNode
    suppressed_row_indices: Tuple[int, ...]
    verdicts: Tuple[ModelVerdict, ...]
    loss: float
    qid: Tuple[str, ...]
    output_schema: Tuple[AttributeSchema, ...] = ()
    nodes_evaluated: int = 0
    nodes_pruned: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "node": self.chosen_node.as_mapping(self.qid),
            "loss": self.loss,
            "suppressed_row_indices": list(self.suppressed_row_indices),
            "suppressed_count": len(self.suppressed_row_indices),
            "verdicts": [v.to_dict() for v in self.verdicts],
            "output_schema": [a.to_dict() for a in self.output_schema],
            "nodes_evaluated": self.nodes_evaluated,
            "nodes_pruned": self.nodes_pruned,
        }


@dataclass
class _Evaluation:
    levels: Levels
    loss: Fraction
    suppressed: Tuple[int, ...]
    feasible: bool
    min_class_size: int
    published: Table = field(repr=False, default=None)

    @property
    def sort_key(self) -> Tuple:
        return (self.loss, sum(self.levels), self.levels)


def build_lattice(hierarchies: Mapping[str, GeneralizationHierarchy]) -> List[Levels]:
    """
    Every level vector of the lattice, ordered by level sum then lexicographically.

    The vector positions follow the mapping's iteration order.
    """
    ranges = [range(h.max_level + 1) for h in hierarchies.values()]
    return sorted(product(*ranges), key=lambda levels: (sum(levels), levels))


def information_loss(original: Table, node: Union[LatticeNode, Sequence[int]],
                     hierarchies: Union[Mapping[str, GeneralizationHierarchy], Sequence[GeneralizationHierarchy]],
                     suppressed: int, qid: Optional[Sequence[str]] = None) -> float:
    """
    Mean normalized generalization level plus suppressed fraction.

    Attributes whose hierarchy has no level above 0 contribute 0.

    Args:
        original: The table before generalization.
        node: A LatticeNode or its level vector.
        hierarchies: Attribute -> hierarchy mapping, or hierarchies already
            aligned with the level vector.
        suppressed: Number of suppressed rows.
        qid: Order of the level vector when ``hierarchies`` is a mapping;
            defaults to the mapping's iteration order, as in ``build_lattice``.
    """
    levels = tuple(node.levels if isinstance(node, LatticeNode) else node)
    if isinstance(hierarchies, Mapping):
        names = list(qid) if qid is not None else list(hierarchies)
        ordered = [hierarchies.get(name) or IdentityHierarchy(name) for name in names]
    else:
        ordered = list(hierarchies)
    if len(ordered) != len(levels):
        raise ValueError(f"Node {levels} does not match {len(ordered)} hierarchies")
    return float(_loss(original.row_count, levels, ordered, suppressed))


def _loss(row_count: int, levels: Levels, hierarchies: Sequence[GeneralizationHierarchy], suppressed: int) -> Fraction:
    generalization = Fraction(0)
    if levels:
        generalization = sum(
            (Fraction(level, h.max_level) for level, h in zip(levels, hierarchies) if h.max_level > 0),
            Fraction(0),
        ) / len(levels)
    suppression = Fraction(suppressed, row_count) if row_count else Fraction(0)
    return generalization + suppression


def _dominates(lower: Levels, upper: Levels) -> bool:
    return all(a <= b for a, b in zip(lower, upper))


class Anonymizer:
    """
    Lattice search for one table, quasi-identifier set and constraint set.

    Attributes:
        max_workers (int): Threads used to evaluate the nodes of one batch.
        prune (bool): Skip ancestors of nodes feasible without suppression.
    """

    def __init__(self, table: Table, qid: Sequence[str], hierarchies: Mapping[str, GeneralizationHierarchy],
                 constraints: AnonymizationConstraints, suppression_budget: float = 0.0,
                 max_workers: int = 1, prune: bool = True):
        if not 0 <= suppression_budget <= 1:
            raise ValueError(f"suppression_budget must lie in [0, 1], got {suppression_budget}")
        if not qid:
            raise SchemaError("Anonymization needs at least one quasi-identifier")
        for name in qid:
            if table.attribute(name).role is AttributeRole.IDENTIFIER:
                raise SchemaError(f"Quasi-identifier '{name}' is declared as an identifier and would be dropped")
        if constraints.sensitive is not None:
            if table.attribute(constraints.sensitive).role is AttributeRole.IDENTIFIER:
                raise SchemaError(f"Sensitive attribute '{constraints.sensitive}' is declared as an identifier")
            if constraints.sensitive in qid:
                raise SchemaError(f"Sensitive attribute '{constraints.sensitive}' cannot be a quasi-identifier")

        self.table = table
        self.qid = tuple(qid)
        self.hierarchies: Dict[str, GeneralizationHierarchy] = {
            name: hierarchies.get(name) or IdentityHierarchy(name) for name in self.qid
        }
        self.constraints = constraints
        self.suppression_budget = suppression_budget
        self.max_workers = max(1, int(max_workers))
        self.prune = prune

    def _suppress(self, partition: Partition) -> List[EquivalenceClass]:
        k, l, t = self.constraints.k, self.constraints.l, self.constraints.t
        sensitive = self.constraints.sensitive
        kept = [c for c in partition.classes if c.size >= k]
        if l is not None:
            kept = [c for c in kept if len(set(partition.values(sensitive, c))) >= l]
        if t is None:
            return kept

        measure = total_variation_distance if self.constraints.distance == TOTAL_VARIATION else earth_movers_distance
        # Removing a class shifts the published distribution, so repeat until stable.
        while kept:
            overall = sensitive_distribution(v for c in kept for v in partition.values(sensitive, c))
            close = [
                c for c in kept
                if float(measure(overall, sensitive_distribution(partition.values(sensitive, c)))) <= t + TOLERANCE
            ]
            if len(close) == len(kept):
                break
            kept = close
        return kept

    def _evaluate(self, levels: Levels) -> _Evaluation:
        node = dict(zip(self.qid, levels))
        generalized = generalize_table(self.table, self.hierarchies, node)
        partition = partition_by_qid(generalized, self.qid)
        kept = self._suppress(partition)

        kept_rows = sorted(i for c in kept for i in c.row_indices)
        kept_set = set(kept_rows)
        suppressed = tuple(i for i in range(self.table.row_count) if i not in kept_set)
        feasible = len(suppressed) <= self.suppression_budget * self.table.row_count + TOLERANCE
        loss = _loss(self.table.row_count, levels, list(self.hierarchies.values()), len(suppressed))

        return _Evaluation(
            levels=levels,
            loss=loss,
            suppressed=suppressed,
            feasible=feasible,
            min_class_size=min(partition.sizes, default=0),
            published=generalized.select_rows(kept_rows) if feasible else None,
        )

    def _verdicts(self, published: Table) -> Tuple[ModelVerdict, ...]:
        partition = partition_by_qid(published, self.qid)
        constraints = self.constraints.as_mapping()
        if published.row_count == 0 and constraints["t"] is not None:
            t = constraints.pop("t")
            verdicts = check_all(partition, constraints)
            empty_t = ModelVerdict("t-closeness", t, True, 0.0, (),
                                   {"sensitive": self.constraints.sensitive, "distance": self.constraints.distance})
            index = 2 if self.constraints.l is not None else 1
            return tuple(verdicts[:index] + [empty_t] + verdicts[index:])
        return tuple(check_all(partition, constraints))

    def run(self) -> AnonymizationResult:
        """
        Search the lattice and publish the best feasible node.

        Raises:
            InfeasibleAnonymizationError: If no node fits within the suppression budget.
        """
        lattice = build_lattice(self.hierarchies)
        logger.info(f"Searching {len(lattice)} lattice nodes over {list(self.qid)} "
                    f"(k={self.constraints.k}, budget={self.suppression_budget}, workers={self.max_workers})")

        evaluations: List[_Evaluation] = []
        dominators: List[Levels] = []
        pruned = 0

        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            for _, batch in groupby(lattice, key=sum):
                pending = []
                for levels in batch:
                    if self.prune and any(_dominates(d, levels) for d in dominators):
                        pruned += 1
                        continue
                    pending.append(levels)
                for evaluation in executor.map(self._evaluate, pending):
                    evaluations.append(evaluation)
                    if evaluation.feasible and not evaluation.suppressed:
                        dominators.append(evaluation.levels)

        feasible = [e for e in evaluations if e.feasible]
        if not feasible:
            closest = min(evaluations, key=lambda e: (len(e.suppressed), e.sort_key))
            best_k = max(e.min_class_size for e in evaluations)
            needed = len(closest.suppressed) / self.table.row_count if self.table.row_count else 0.0
            raise InfeasibleAnonymizationError(
                f"No lattice node reaches k={self.constraints.k} within a suppression budget of "
                f"{self.suppression_budget}; best achievable k is {best_k} and at least "
                f"{needed:.4f} of the rows would need suppressing",
                best_k=best_k,
                suppression_needed=needed,
                best_node=dict(zip(self.qid, closest.levels)),
            )

        best = min(feasible, key=lambda e: e.sort_key)
        node = LatticeNode(best.levels, float(best.loss), True, len(best.suppressed))
        result = AnonymizationResult(
            output_table=best.published,
            chosen_node=node,
            suppressed_row_indices=best.suppressed,
            verdicts=self._verdicts(best.published),
            loss=float(best.loss),
            qid=self.qid,
            output_schema=generalized_schema(self.table.schema, node.as_mapping(self.qid)),
            nodes_evaluated=len(evaluations),
            nodes_pruned=pruned,
        )
        logger.info(f"Chose node {node.as_mapping(self.qid)} with loss {node.loss:.4f}, "
                    f"{node.suppressed_count} rows suppressed, {pruned} nodes pruned")
        return result


def anonymize(table: Table, qid: Sequence[str], hierarchies: Mapping[str, GeneralizationHierarchy],
              constraints: Any, suppression_budget: float = 0.0, max_workers: int = 1,
              prune: bool = True) -> AnonymizationResult:
    """
    Enforce k-anonymity (plus optional l-diversity / t-closeness) by generalization and suppression.

    Args:
        table: Input table.
        qid: Quasi-identifier attributes; each is generalized along its hierarchy,
            or kept as is when no hierarchy is given.
        hierarchies: Attribute name -> hierarchy.
        constraints: AnonymizationConstraints or a mapping with ``k`` and optional
            ``l``, ``t``, ``sensitive``, ``distance``.
        suppression_budget: Largest fraction of rows that may be suppressed.
        max_workers: Threads per evaluation batch.
        prune: Skip dominated nodes; ``False`` evaluates the whole lattice.

    Returns:
        AnonymizationResult
    """
    if not isinstance(constraints, AnonymizationConstraints):
        constraints = AnonymizationConstraints.from_dict(constraints)
    return Anonymizer(table, qid, hierarchies, constraints, suppression_budget, max_workers, prune).run()
