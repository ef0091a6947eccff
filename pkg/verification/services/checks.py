"""
Corpus-driven verification of the product theorems and lexicographic
product properties.

Each check evaluates one ordered factor pair (G, H) exactly. Pairs outside a
check's hypothesis are counted as skipped so a pass over zero applicable
instances is visible as vacuous.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from django.conf import settings

from graphs.exceptions import ConstructionFailedError, CorpusBoundsError, UnknownCheckError
from graphs.services.domination import DominationSolver, DominationWitness
from graphs.services.graph_core import (
    EccentricityProfile,
    Graph,
    eccentricity_profile,
    format_distance,
    parse_graph,
    serialize_graph,
)
from graphs.services.products import lex_product, strong_product
from teams.services.comfort import (
    ComfortableTeamSolver,
    ComfortVerdict,
    lex_radius_fast_paths,
    lex_team_construction,
    strong_team_construction,
)
from utils.logging_utils import LoggingContextManager, get_logger, log_performance
from verification.services.corpus import CorpusSpec

logger = get_logger(__name__)


@dataclass(frozen=True)
class Counterexample:
    """Self-contained certificate: both factors plus the violated claim"""
    check_id: str
    g_text: str
    h_text: str
    subject: str
    expected: str
    actual: str


@dataclass(frozen=True)
class VerificationReport:
    check_id: str
    description: str
    corpus: str
    instances_checked: int
    skipped: int
    counterexamples: Tuple[Counterexample, ...]
    certified_by_construction: int = 0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def vacuous(self) -> bool:
        return self.instances_checked == 0


@dataclass
class PairResult:
    applicable: bool
    violations: List[Tuple[str, str, str]] = field(default_factory=list)
    certified_by_construction: bool = False

    def violate(self, subject: str, expected, actual) -> None:
        self.violations.append((subject, str(expected), str(actual)))


@dataclass(frozen=True)
class CheckDefinition:
    check_id: str
    description: str
    needs_search: bool


CHECKS: Dict[str, CheckDefinition] = {
    definition.check_id: definition for definition in (
        CheckDefinition('T1', 'strong product eccentricity is the larger factor eccentricity', False),
        CheckDefinition('T2', 'domination number of a strong product is at most the product of the factors', True),
        CheckDefinition('T3', 'comfortable teams of both factors lift to a comfortable team of the strong product', True),
        CheckDefinition('T4', 'connected domination number of a lexicographic product equals that of G', True),
        CheckDefinition('T5', 'minimum comfortable team size of a lexicographic product equals that of G when r(G) >= 2', True),
        CheckDefinition('P1', 'lexicographic product keeps every edge of G in every fiber', False),
        CheckDefinition('P2', 'radius-1 G and H give a radius-1 lexicographic product with a one-vertex team', True),
        CheckDefinition('P3', 'radius-1 G and radius >= 2 H give a 2-self-centered product with a two-vertex team', True),
        CheckDefinition('P4', 'lexicographic product eccentricity equals the G eccentricity when r(G) >= 2', False),
    )
}


def _team_text(team) -> str:
    return '{' + ','.join(str(v) for v in sorted(team)) + '}'


class FactorFacts:
    """Per-graph invariants, memoised across the pairs of a corpus"""

    def __init__(self, domination: DominationSolver, comfort: ComfortableTeamSolver):
        self._domination = domination
        self._comfort = comfort
        self._profiles: Dict[Graph, EccentricityProfile] = {}
        self._gamma: Dict[Graph, DominationWitness] = {}
        self._gamma_c: Dict[Graph, DominationWitness] = {}
        self._comfort_verdicts: Dict[Graph, Optional[ComfortVerdict]] = {}

    def profile(self, g: Graph) -> EccentricityProfile:
        if g not in self._profiles:
            self._profiles[g] = eccentricity_profile(g)
        return self._profiles[g]

    def gamma(self, g: Graph) -> int:
        if g not in self._gamma:
            self._gamma[g] = self._domination.min_dominating_set(g)
        return self._gamma[g].size

    def gamma_c(self, g: Graph) -> int:
        if g not in self._gamma_c:
            self._gamma_c[g] = self._domination.min_connected_dominating_set(g)
        return self._gamma_c[g].size

    def comfort(self, g: Graph) -> Optional[ComfortVerdict]:
        """Minimum comfortable team verdict; None for K1, which has none to lower"""
        if g not in self._comfort_verdicts:
            self._comfort_verdicts[g] = None if g.n == 1 else self._comfort.min_comfortable_team(g)
        return self._comfort_verdicts[g]

    def has_team(self, g: Graph) -> bool:
        verdict = self.comfort(g)
        return verdict is not None and verdict.exists


class VerificationService:
    """Runs theorem and property checks over graph corpora"""

    def __init__(self, search_cap: Optional[int] = None):
        self.search_cap = search_cap if search_cap is not None else settings.VERIFY_SEARCH_CAP
        self.domination = DominationSolver(search_cap=self.search_cap)
        self.comfort = ComfortableTeamSolver(search_cap=self.search_cap)
        self.facts = FactorFacts(self.domination, self.comfort)
        self._handlers: Dict[str, Callable[[Graph, Graph], PairResult]] = {
            'T1': self._check_t1,
            'T2': self._check_t2,
            'T3': self._check_t3,
            'T4': self._check_t4,
            'T5': self._check_t5,
            'P1': self._check_p1,
            'P2': self._check_p2,
            'P3': self._check_p3,
            'P4': self._check_p4,
        }

    @staticmethod
    def definition(check_id: str) -> CheckDefinition:
        try:
            return CHECKS[check_id.upper()]
        except KeyError:
            raise UnknownCheckError(f"Unknown check: {check_id}. Must be one of {list(CHECKS)}")

    @log_performance('verification.services.checks', threshold=60.0)
    def run_check(self, check_id: str, corpus: CorpusSpec) -> VerificationReport:
        """
        Evaluate one check over every ordered factor pair of the corpus

        Args:
            check_id: one of T1..T5, P1..P4
            corpus: factor corpus; both factors are drawn from it

        Returns:
            VerificationReport: applicable/skipped counts and counterexamples
        """
        definition = self.definition(check_id)
        corpus.validate()
        if definition.needs_search and corpus.max_order ** 2 > self.search_cap:
            raise CorpusBoundsError(
                f"{definition.check_id} searches products of up to {corpus.max_order ** 2} vertices, "
                f"above the verification cap of {self.search_cap}"
            )

        applicable = skipped = certified = 0
        counterexamples: List[Counterexample] = []
        with LoggingContextManager(logger, f"check {definition.check_id}",
                                   check_id=definition.check_id, corpus=corpus.describe()):
            for g, h in corpus.pairs():
                result = self._handlers[definition.check_id](g, h)
                if not result.applicable:
                    skipped += 1
                    continue
                applicable += 1
                certified += int(result.certified_by_construction)
                counterexamples.extend(self._certificates(definition.check_id, g, h, result))
                if applicable % 500 == 0:
                    logger.debug(f"{definition.check_id}: {applicable} applicable instances evaluated")

        logger.log_check_result(definition.check_id, applicable, skipped, len(counterexamples))
        return VerificationReport(
            check_id=definition.check_id,
            description=definition.description,
            corpus=corpus.describe(),
            instances_checked=applicable,
            skipped=skipped,
            counterexamples=tuple(counterexamples),
            certified_by_construction=certified,
        )

    def check_pair(self, check_id: str, g: Graph, h: Graph) -> PairResult:
        """Evaluate a single ordered pair"""
        definition = self.definition(check_id)
        return self._handlers[definition.check_id](g, h)

    def recheck(self, counterexample: Counterexample) -> List[Counterexample]:
        """Re-evaluate a certificate from its embedded factor graphs alone"""
        g = parse_graph(counterexample.g_text)
        h = parse_graph(counterexample.h_text)
        result = self.check_pair(counterexample.check_id, g, h)
        return list(self._certificates(counterexample.check_id, g, h, result))

    def _certificates(self, check_id: str, g: Graph, h: Graph, result: PairResult) -> List[Counterexample]:
        certificates = []
        for subject, expected, actual in result.violations:
            logger.log_counterexample(check_id, subject, expected, actual)
            certificates.append(Counterexample(
                check_id=check_id,
                g_text=serialize_graph(g),
                h_text=serialize_graph(h),
                subject=subject,
                expected=expected,
                actual=actual,
            ))
        return certificates

    def _check_t1(self, g: Graph, h: Graph) -> PairResult:
        result = PairResult(applicable=True)
        product, idx = strong_product(g, h)
        product_ecc = eccentricity_profile(product).ecc
        g_ecc, h_ecc = self.facts.profile(g).ecc, self.facts.profile(h).ecc
        for p in range(product.n):
            i, j = idx.unflatten(p)
            expected = max(g_ecc[i], h_ecc[j])
            if product_ecc[p] != expected:
                result.violate(f"eccentricity of vertex {p} {idx.label(p)}",
                               format_distance(expected), format_distance(product_ecc[p]))
        return result

    def _check_t2(self, g: Graph, h: Graph) -> PairResult:
        result = PairResult(applicable=True)
        product, _ = strong_product(g, h)
        bound = self.facts.gamma(g) * self.facts.gamma(h)
        witness = self.domination.min_dominating_set(product)
        if witness.size > bound:
            result.violate('domination number of the strong product', f"<= {bound}",
                           f"{witness.size} {_team_text(witness.witness)}")
        return result

    def _check_t3(self, g: Graph, h: Graph) -> PairResult:
        if not (self.facts.has_team(g) and self.facts.has_team(h)):
            return PairResult(applicable=False)
        result = PairResult(applicable=True)
        s1, s2 = self.facts.comfort(g).team, self.facts.comfort(h).team
        bound = len(s1) * len(s2)
        product, idx = strong_product(g, h)
        try:
            strong_team_construction(g, h, s1, s2, idx, product)
        except ConstructionFailedError as e:
            result.violate(f"lifted team {_team_text(e.team)}", 'comfortable team',
                           f"dominating={e.diagnosis.dominating} connected={e.diagnosis.connected} "
                           f"less_dispersive={e.diagnosis.less_dispersive}")
            return result

        if product.n > min(self.comfort.search_cap, settings.GRAPH_SEARCH_CAP):
            # the verified lift of size |S1|*|S2| is itself the bound
            result.certified_by_construction = True
            return result
        verdict = self.comfort.min_comfortable_team(product)
        if not verdict.exists:
            result.violate('minimum comfortable team of the strong product', f"size <= {bound}", 'none')
        elif verdict.size > bound:
            result.violate('minimum comfortable team of the strong product', f"size <= {bound}",
                           f"{verdict.size} {_team_text(verdict.team)}")
        return result

    def _check_t4(self, g: Graph, h: Graph) -> PairResult:
        # a universal vertex of G only stays universal when H has one too
        if g.n < 2 or (self.facts.gamma_c(g) < 2 and self.facts.profile(h).radius > 1):
            return PairResult(applicable=False)
        result = PairResult(applicable=True)
        product, _ = lex_product(g, h)
        expected = self.facts.gamma_c(g)
        witness = self.domination.min_connected_dominating_set(product)
        if witness.size != expected:
            result.violate('connected domination number of the lexicographic product', expected,
                           f"{witness.size} {_team_text(witness.witness)}")
        return result

    def _check_t5(self, g: Graph, h: Graph) -> PairResult:
        if self.facts.profile(g).radius < 2 or not self.facts.has_team(g):
            return PairResult(applicable=False)
        result = PairResult(applicable=True)
        team = self.facts.comfort(g).team
        product, idx = lex_product(g, h)

        verdict = self.comfort.min_comfortable_team(product)
        if not verdict.exists:
            result.violate('minimum comfortable team of the lexicographic product', len(team), 'none')
        elif verdict.size != len(team):
            result.violate('minimum comfortable team of the lexicographic product', len(team),
                           f"{verdict.size} {_team_text(verdict.team)}")

        for j in range(h.n):
            try:
                lex_team_construction(g, h, team, j, idx, product)
            except ConstructionFailedError as e:
                result.violate(f"fiber {j} team {_team_text(e.team)}", 'comfortable team',
                               f"dominating={e.diagnosis.dominating} "
                               f"less_dispersive={e.diagnosis.less_dispersive}")
        return result

    def _check_p1(self, g: Graph, h: Graph) -> PairResult:
        result = PairResult(applicable=True)
        product, idx = lex_product(g, h)
        for k in range(g.n):
            for a in sorted(g.adj[k]):
                for j in range(h.n):
                    p, q = idx.flatten(k, j), idx.flatten(a, j)
                    if not product.has_edge(p, q):
                        result.violate(f"edge {idx.label(p)}-{idx.label(q)}", 'adjacent', 'not adjacent')
        return result

    def _check_p2(self, g: Graph, h: Graph) -> PairResult:
        if self.facts.profile(g).radius != 1 or self.facts.profile(h).radius > 1:
            return PairResult(applicable=False)
        return self._check_lex_radius(g, h, expected_radius=1, expected_team=1, self_centered=False)

    def _check_p3(self, g: Graph, h: Graph) -> PairResult:
        if self.facts.profile(g).radius != 1 or self.facts.profile(h).radius < 2:
            return PairResult(applicable=False)
        return self._check_lex_radius(g, h, expected_radius=2, expected_team=2, self_centered=True)

    def _check_lex_radius(self, g: Graph, h: Graph, expected_radius: int, expected_team: int,
                          self_centered: bool) -> PairResult:
        result = PairResult(applicable=True)
        product, _ = lex_product(g, h)
        profile = eccentricity_profile(product)
        if profile.radius != expected_radius:
            result.violate('radius of the lexicographic product', expected_radius,
                           format_distance(profile.radius))
        if self_centered and not profile.self_centered:
            result.violate('self-centered lexicographic product', f"diameter {expected_radius}",
                           f"diameter {format_distance(profile.diameter)}")

        verdict = self.comfort.min_comfortable_team(product)
        if not verdict.exists or verdict.size != expected_team:
            actual = 'none' if not verdict.exists else f"{verdict.size} {_team_text(verdict.team)}"
            result.violate('minimum comfortable team of the lexicographic product', expected_team, actual)

        try:
            fast = lex_radius_fast_paths(g, h)
        except ConstructionFailedError as e:
            result.violate(f"fast-path team {_team_text(e.team)}", 'comfortable team', 'fails the check')
        else:
            if fast is None or fast.size != expected_team:
                result.violate('fast-path team size', expected_team, 'none' if fast is None else fast.size)
        return result

    def _check_p4(self, g: Graph, h: Graph) -> PairResult:
        g_ecc = self.facts.profile(g).ecc
        if self.facts.profile(g).radius < 2:
            return PairResult(applicable=False)
        result = PairResult(applicable=True)
        product, idx = lex_product(g, h)
        product_ecc = eccentricity_profile(product).ecc
        for p in range(product.n):
            i, _ = idx.unflatten(p)
            if product_ecc[p] != g_ecc[i]:
                result.violate(f"eccentricity of vertex {p} {idx.label(p)}",
                               format_distance(g_ecc[i]), format_distance(product_ecc[p]))
        return result


def render_report(report: VerificationReport) -> str:
    """Line-oriented text rendering of a report"""
    lines = [
        f"{report.check_id}: {report.description}",
        f"corpus: {report.corpus}",
        f"applicable instances: {report.instances_checked}",
        f"skipped (hypothesis not met): {report.skipped}",
    ]
    if report.certified_by_construction:
        lines.append(f"bound certified by construction only: {report.certified_by_construction}")
    lines.append(f"counterexamples: {len(report.counterexamples)}")
    for number, certificate in enumerate(report.counterexamples, start=1):
        lines.append(f"  #{number} {certificate.subject}: expected {certificate.expected}, "
                     f"actual {certificate.actual}")
        lines.append(f"     G: {_inline(certificate.g_text)}")
        lines.append(f"     H: {_inline(certificate.h_text)}")
    if not report.passed:
        lines.append('result: FAILED')
    elif report.vacuous:
        lines.append('result: PASSED (vacuous: 0 applicable instances)')
    else:
        lines.append('result: PASSED')
    return '\n'.join(lines) + '\n'


def _inline(graph_text: str) -> str:
    return ' / '.join(line for line in graph_text.splitlines() if line)
