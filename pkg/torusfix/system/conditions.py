"""
Triviality, surjectivity and localization checks on a system of cochain algebras,
and the aggregated hypothesis report for realization.
"""

"""
Copyright (c) 2025 Firefly Software Solutions Inc.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at:

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..circle.algebra import FiniteCommAlgebra
from ..circle.splitting import split_semisimple_test
from ..core.lattice import SubgroupLattice, contains
from ..core.linalg import (
    SparseMatrix,
    Vector,
    complement,
    intersect_spans,
    kernel_basis,
    span_rank,
    unit_vector,
)
from ..core.poset import m_D
from ..core.polynomials import monomial_basis
from ..errors import InputError, InvariantViolation
from .annihilators import (
    AnnihilatorPolicy,
    Multiplier,
    PendingClass,
    Survivor,
    annihilator_search,
    candidate_forms,
    multiplier_degree,
)
from .cdga import CdgaPresentation, ProductCochain
from .diagram import SystemDiagram

logger = logging.getLogger(__name__)


class VerdictKind(Enum):
    VERIFIED = "verified-up-to"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ConditionVerdict:
    """Outcome of one condition at one node or pair; Inconclusive only for localization."""

    condition: str
    location: str
    kind: VerdictKind
    degree_bound: int
    degree: Optional[int] = None
    defect: Optional[int] = None
    survivors: Tuple[Survivor, ...] = ()
    details: Dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def verified(self) -> bool:
        return self.kind is VerdictKind.VERIFIED

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "condition": self.condition,
            "location": self.location,
            "verdict": self.kind.value,
            "degree_bound": self.degree_bound,
        }
        if self.kind is VerdictKind.FAILS:
            data["degree"] = self.degree
            data["defect"] = self.defect
        if self.kind is VerdictKind.INCONCLUSIVE:
            data["survivors"] = [s.to_dict() for s in self.survivors]
        data.update(self.details)
        return data


def _require_rstructure(system: SystemDiagram) -> None:
    if system.rstructure is None:
        raise InputError("This check needs an R-structure on the system")


def _pair_location(system: SystemDiagram, i: int, j: int) -> str:
    return f"{system.names[i]} -> {system.names[j]}"


def _power_product(
    algebra: CdgaPresentation,
    classes: Sequence[ProductCochain],
    exponents: Sequence[int],
    cache: Dict[Tuple[int, ...], ProductCochain],
) -> ProductCochain:
    key = tuple(exponents)
    if key not in cache:
        result = algebra.unit()
        for cls, e in zip(classes, exponents):
            for _ in range(e):
                result = algebra.multiply(result, cls)
        cache[key] = result
    return cache[key]


# -- triviality -------------------------------------------------------------------


def _tc_pairs(system: SystemDiagram) -> List[Tuple[int, int]]:
    pairs = []
    for i in system.poset.ordered():
        U, H = system.poset.pairs[i]
        for j in system.poset.upper_set(i):
            K, H2 = system.poset.pairs[j]
            if H2 == H and K != U:
                pairs.append((i, j))
    return pairs


def check_TC(system: SystemDiagram, degree_bound: int) -> List[ConditionVerdict]:
    """Base change R_{T/K} ⊗ H*(A(U,H)) -> H*(A(K,H)) degreewise up to the bound."""
    _require_rstructure(system)
    n = system.poset.n
    verdicts = []
    for i, j in _tc_pairs(system):
        U = system.poset.pairs[i][0]
        K = system.poset.pairs[j][0]
        source = system.algebras[i]
        target = system.algebras[j]
        f = system.composite(i, j)
        chosen = complement(U.rational_basis(), K.rational_basis(), n)
        W = [K.rational_basis()[c] for c in chosen]
        if len(W) != K.rank - U.rank:
            raise InvariantViolation(f"No complement of L(U) in L(K) for {_pair_location(system, i, j)}")
        w_classes = [system.rho(j, w) for w in W]
        cache: Dict[Tuple[int, ...], ProductCochain] = {}
        verdict = ConditionVerdict("TC", _pair_location(system, i, j), VerdictKind.VERIFIED, degree_bound)
        for k in range(degree_bound + 1):
            target_dim = target.cohomology_dimension(k)
            images: List[Vector] = []
            for p in range(k // 2 + 1):
                reps = source.cohomology(k - 2 * p).representatives()
                if not reps:
                    continue
                for exponents in monomial_basis(len(W), p):
                    multiplier = _power_product(target, w_classes, exponents, cache)
                    for rep in reps:
                        mapped = f.apply(source.from_vector(rep, k - 2 * p))
                        images.append(target.to_vector(target.multiply(multiplier, mapped), k))
            coordinates = target.cohomology(k).coordinates(images) if images else []
            r = span_rank(coordinates, target_dim) if coordinates and target_dim else 0
            logger.debug(
                "Triviality degree checked",
                extra={"pair": verdict.location, "degree": k, "source": len(images), "target": target_dim, "rank": r},
            )
            if r != len(images) or r != target_dim:
                verdict = ConditionVerdict(
                    "TC", verdict.location, VerdictKind.FAILS, degree_bound,
                    degree=k, defect=max(len(images), target_dim) - r,
                )
                break
        verdicts.append(verdict)
    logger.info("Triviality condition checked", extra={"pairs": len(verdicts)})
    return verdicts


# -- surjectivity -----------------------------------------------------------------


def check_SC(system: SystemDiagram, degree_bound: int) -> List[ConditionVerdict]:
    """Each node against the equalizer of its strict upper set, on cochains."""
    verdicts = []
    covers = system.poset.covers()
    for i in system.poset.ordered():
        upper = system.poset.upper_set(i)
        location = system.names[i]
        verdict = ConditionVerdict("SC", location, VerdictKind.VERIFIED, degree_bound)
        if not upper:
            verdicts.append(verdict)
            continue
        inside = [(a, b) for a, b in covers if a in upper and b in upper]
        for k in range(degree_bound + 1):
            sizes = [system.algebras[j].basis_size(k) for j in upper]
            offsets = {}
            total = 0
            for j, size in zip(upper, sizes):
                offsets[j] = total
                total += size
            if total == 0:
                continue
            entries: Dict[Tuple[int, int], Fraction] = {}
            row = 0
            for a, b in inside:
                f = system.maps[(a, b)]
                source = system.algebras[a]
                target_size = system.algebras[b].basis_size(k)
                for column, element in enumerate(source.basis_elements(k)):
                    for r, value in enumerate(system.algebras[b].to_vector(f.apply(element), k)):
                        if value != 0:
                            entries[(row + r, offsets[a] + column)] = value
                for r in range(target_size):
                    key = (row + r, offsets[b] + r)
                    entries[key] = entries.get(key, Fraction(0)) - 1
                row += target_size
            equalizer = kernel_basis(SparseMatrix(row, total, entries))
            images = []
            for element in system.algebras[i].basis_elements(k):
                vector: List[Fraction] = []
                for j in upper:
                    vector.extend(system.algebras[j].to_vector(system.composite(i, j).apply(element), k))
                images.append(tuple(vector))
            reached = len(intersect_spans(images, equalizer, total)) if images and equalizer else 0
            if reached != len(equalizer):
                verdict = ConditionVerdict(
                    "SC", location, VerdictKind.FAILS, degree_bound, degree=k, defect=len(equalizer) - reached
                )
                break
        verdicts.append(verdict)
    logger.info("Surjectivity condition checked", extra={"nodes": len(verdicts)})
    return verdicts


# -- localization -----------------------------------------------------------------


def _isotropy_lines(system: SystemDiagram, U: SubgroupLattice) -> List[Vector]:
    n = system.poset.n
    lines = []
    for group in list(system.poset.d_right) + list(system.poset.d_left):
        if not group.ann:
            continue
        meet = intersect_spans(group.rational_basis(), U.rational_basis(), n)
        if len(meet) == 1:
            lines.append(meet[0])
    return lines


def _localization_tori(system: SystemDiagram, extra: Sequence[SubgroupLattice]) -> List[SubgroupLattice]:
    tori = list(system.poset.d_left)
    for K in extra:
        if K.n != system.poset.n:
            raise InputError(f"Torus {K.label()} does not live in rank {system.poset.n}")
        if not K.is_subtorus:
            raise InputError(f"{K.label()} is not a torus")
        if K not in tori:
            tori.append(K)
    return tori


def _apply_multiplier(
    algebra: CdgaPresentation,
    classes: Dict[int, ProductCochain],
    multiplier: Multiplier,
    x: ProductCochain,
) -> ProductCochain:
    result = x
    for index, exponent in multiplier:
        for _ in range(exponent):
            result = algebra.multiply(classes[index], result)
    return result


def check_LC(
    system: SystemDiagram,
    degree_bound: int,
    policy: Optional[AnnihilatorPolicy] = None,
    tori: Sequence[SubgroupLattice] = (),
) -> List[ConditionVerdict]:
    """
    Kernel and cokernel of H*(A(U,H)) -> H*(A(U, m(K))) annihilated by S_{T/U}(K).

    Tori are taken from the left components of the poset plus `tori`; those not
    containing H are skipped. Never reports a failure: classes with no annihilator
    among the tried multipliers make the verdict Inconclusive.
    """
    _require_rstructure(system)
    policy = policy or AnnihilatorPolicy()
    power_bound = policy.resolved_power_bound(degree_bound)
    n = system.poset.n
    verdicts = []
    for i in system.poset.ordered():
        U, H = system.poset.pairs[i]
        for K in _localization_tori(system, tori):
            if not contains(K, H):
                continue
            pair = (U, m_D(system.poset, K))
            if pair not in system.poset:
                continue
            j = system.poset.index(pair)
            location = f"{system.names[i]} @ {K.label()}"
            base_details: Dict[str, Any] = {"torus": K.label(), "target": system.names[j]}
            if j == i:
                verdicts.append(
                    ConditionVerdict("LC", location, VerdictKind.VERIFIED, degree_bound, details=base_details)
                )
                continue
            source = system.algebras[i]
            target = system.algebras[j]
            f = system.composite(i, j)
            pending: List[PendingClass] = []
            kernel_dims = []
            cokernel_dims = []
            for k in range(degree_bound + 1):
                source_h = source.cohomology(k)
                target_h = target.cohomology(k)
                columns = f.cohomology_columns(k) if source_h.dimension else []
                kernel = (
                    kernel_basis(SparseMatrix.from_columns(columns, target_h.dimension)) if columns else []
                )
                reps = source_h.representatives()
                for vector in kernel:
                    cochain = source.from_vector(
                        tuple(sum((c * rep[m] for c, rep in zip(vector, reps)), Fraction(0))
                              for m in range(source_h.cochain_dimension)),
                        k,
                    )
                    pending.append(PendingClass(k, "kernel", source.format(cochain), cochain))
                units = [unit_vector(target_h.dimension, m) for m in range(target_h.dimension)]
                missing = complement(columns, units, target_h.dimension) if units else []
                target_reps = target_h.representatives()
                for m in missing:
                    cochain = target.from_vector(target_reps[m], k)
                    pending.append(PendingClass(k, "cokernel", target.format(cochain), cochain))
                kernel_dims.append(len(kernel))
                cokernel_dims.append(len(missing))

            V = intersect_spans(U.rational_basis(), K.rational_basis(), n)
            forms = candidate_forms(U.rational_basis(), V, _isotropy_lines(system, U), policy, n)
            source_classes = {index: system.rho(i, form) for index, form in enumerate(forms.forms)}
            target_classes = {index: system.rho(j, form) for index, form in enumerate(forms.forms)}
            image_cache: Dict[int, List[Vector]] = {}

            def image_coordinates(m: int) -> List[Vector]:
                if m not in image_cache:
                    image_cache[m] = f.cohomology_columns(m) if source.cohomology_dimension(m) else []
                return image_cache[m]

            def annihilates(item: PendingClass, multiplier: Multiplier) -> bool:
                m = item.degree + 2 * multiplier_degree(multiplier)
                if item.side == "kernel":
                    product = _apply_multiplier(source, source_classes, multiplier, item.payload)
                    return source.is_coboundary(product, m)
                product = _apply_multiplier(target, target_classes, multiplier, item.payload)
                coordinates = target.class_coordinates(product, m)
                if coordinates is None:
                    raise InvariantViolation("Product of cocycles is not a cocycle")
                if all(c == 0 for c in coordinates):
                    return True
                image = image_coordinates(m)
                return bool(image) and span_rank(image + [coordinates], len(coordinates)) == span_rank(
                    image, len(coordinates)
                )

            outcome = (
                annihilator_search(pending, forms, power_bound, annihilates) if forms.forms else None
            )
            survivors = tuple(
                outcome.survivors if outcome is not None
                else [Survivor(p.degree, p.side, p.representative) for p in pending]
            )
            details = dict(base_details)
            details.update(
                {
                    "kernel_dims": kernel_dims,
                    "cokernel_dims": cokernel_dims,
                    "forms": [list(form) for form in forms.forms],
                    "attempts": outcome.attempts if outcome is not None else 0,
                }
            )
            kind = VerdictKind.INCONCLUSIVE if survivors else VerdictKind.VERIFIED
            verdicts.append(
                ConditionVerdict("LC", location, kind, degree_bound, survivors=survivors, details=details)
            )
    logger.info(
        "Localization condition checked",
        extra={"checks": len(verdicts), "inconclusive": sum(not v.verified for v in verdicts)},
    )
    return verdicts


# -- hypothesis report -----------------------------------------------------------


class ItemStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


@dataclass
class NodeHypotheses:
    node: str
    spacelike: bool
    spacelike_witness: Optional[str]
    h1_zero: bool
    injective: bool
    generator_degrees: List[int]
    finitely_generated_probe: bool

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "node": self.node,
            "spacelike": self.spacelike,
            "h1_zero": self.h1_zero,
            "injective_r2_h0_h2": self.injective,
            "generator_degrees": list(self.generator_degrees),
            "finite_generation_probe": {"stable": self.finitely_generated_probe, "heuristic": True},
        }
        if self.spacelike_witness is not None:
            data["spacelike_witness"] = self.spacelike_witness
        return data


@dataclass
class HypothesisList:
    name: str
    items: Dict[str, ItemStatus]

    @property
    def status(self) -> ItemStatus:
        values = list(self.items.values())
        if ItemStatus.FAIL in values:
            return ItemStatus.FAIL
        if ItemStatus.INCONCLUSIVE in values:
            return ItemStatus.INCONCLUSIVE
        return ItemStatus.PASS

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status.value,
            "items": {key: value.value for key, value in self.items.items()},
        }


@dataclass
class RealizationReport:
    degree_bound: int
    nodes: List[NodeHypotheses]
    triviality: List[ConditionVerdict]
    localization: List[ConditionVerdict]
    infinite: HypothesisList
    finite: HypothesisList

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree_bound": self.degree_bound,
            "nodes": [node.to_dict() for node in self.nodes],
            "triviality": [v.to_dict() for v in self.triviality],
            "localization": [v.to_dict() for v in self.localization],
            "infinite_complex": self.infinite.to_dict(),
            "finite_complex": self.finite.to_dict(),
        }


def degree_zero_cohomology_algebra(algebra: CdgaPresentation) -> FiniteCommAlgebra:
    """H^0 as a finite commutative algebra on its class basis."""
    h0 = algebra.cohomology(0)
    reps = [algebra.from_vector(rep, 0) for rep in h0.representatives()]
    structure = []
    for a in reps:
        row = []
        for b in reps:
            coordinates = algebra.class_coordinates(algebra.multiply(a, b), 0)
            if coordinates is None:
                raise InvariantViolation("Product of degree-zero cocycles is not a cocycle")
            row.append(tuple(coordinates))
        structure.append(tuple(row))
    unit = algebra.class_coordinates(algebra.unit(), 0) if reps else ()
    names = tuple(f"h{index}" for index in range(len(reps)))
    return FiniteCommAlgebra(names, tuple(structure), tuple(unit or ()))


def _node_hypotheses(system: SystemDiagram, i: int, degree_bound: int) -> NodeHypotheses:
    algebra = system.algebras[i]
    U = system.poset.pairs[i][0]
    split = split_semisimple_test(degree_zero_cohomology_algebra(algebra))
    basis = U.rational_basis()
    r2 = [system.rho(i, u) for u in basis]

    def decomposables(k: int) -> List[Vector]:
        if k < 2:
            return []
        out = []
        for rep in algebra.cohomology(k - 2).representatives():
            element = algebra.from_vector(rep, k - 2)
            for cls in r2:
                coordinates = algebra.class_coordinates(algebra.multiply(cls, element), k)
                if coordinates is None:
                    raise InvariantViolation("Product of cocycles is not a cocycle")
                out.append(coordinates)
        return out

    h0 = algebra.cohomology_dimension(0)
    h2 = algebra.cohomology_dimension(2)
    products = decomposables(2)
    injective = (span_rank(products, h2) if products and h2 else 0) == len(basis) * h0

    generator_degrees = []
    for k in range(degree_bound + 1):
        dimension = algebra.cohomology_dimension(k)
        spanned = decomposables(k)
        new = dimension - (span_rank(spanned, dimension) if spanned and dimension else 0)
        generator_degrees.extend([k] * new)
    stable = all(3 * k <= 2 * degree_bound for k in generator_degrees)
    return NodeHypotheses(
        node=system.names[i],
        spacelike=split.is_split,
        spacelike_witness=split.witness,
        h1_zero=algebra.cohomology_dimension(1) == 0,
        injective=injective,
        generator_degrees=generator_degrees,
        finitely_generated_probe=stable,
    )


def _status(ok: bool) -> ItemStatus:
    return ItemStatus.PASS if ok else ItemStatus.FAIL


def realization_hypotheses(
    system: SystemDiagram,
    degree_bound: int,
    policy: Optional[AnnihilatorPolicy] = None,
    tori: Sequence[SubgroupLattice] = (),
) -> RealizationReport:
    """Both hypothesis lists of the realization theorems, up to the degree bound."""
    _require_rstructure(system)
    nodes = [_node_hypotheses(system, i, degree_bound) for i in system.poset.ordered()]
    triviality = check_TC(system, degree_bound)
    localization = check_LC(system, degree_bound, policy, tori)

    items = {
        "triviality": _status(all(v.verified for v in triviality)),
        "spacelike": _status(all(node.spacelike for node in nodes)),
        "finite_type": ItemStatus.PASS,
        "h1_zero": _status(all(node.h1_zero for node in nodes)),
        "injectivity": _status(all(node.injective for node in nodes)),
    }
    infinite = HypothesisList("infinite-complex", dict(items))
    items["localization"] = (
        ItemStatus.PASS if all(v.verified for v in localization) else ItemStatus.INCONCLUSIVE
    )
    items["finite_generation"] = (
        ItemStatus.PASS if all(node.finitely_generated_probe for node in nodes) else ItemStatus.INCONCLUSIVE
    )
    finite = HypothesisList("finite-complex", items)
    logger.info(
        "Realization hypotheses evaluated",
        extra={"infinite": infinite.status.value, "finite": finite.status.value},
    )
    return RealizationReport(degree_bound, nodes, triviality, localization, infinite, finite)
