# src/cli/synthetic.py
"""
GÉNÉRATEUR DE JEUX DE DONNÉES SYNTHÉTIQUES (TOPOLOGIE HIÉRARCHIQUE, RIB, TRACES)
"""

import ipaddress
import os
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from ingest.countries import format_as_countries
from ingest.prefixes import format_prefix_to_as, format_target_prefix
from ingest.records import GAP, RelationshipEdge, RibEntry, RouterTrace, TargetPrefix
from ingest.relationships import PEER_CODE, PROVIDER_CODE, format_relationship
from ingest.rib import format_rib
from ingest.traces import format_trace
from inference.path_inference import infer_paths
from inference.paths import SurePath
from topology.graph import build_graph
from utils.config import config
from utils.helpers import get_logger, write_lines

logger = get_logger("synth")

ASN_BASE = 64512
FILES = {
    'rels': 'synth.rels.txt',
    'rib': 'synth.rib.txt',
    'prefixes': 'synth.prefixes.txt',
    'countries': 'synth.countries.txt',
    'censors': 'synth.censors.txt',
    'traces': 'synth.traces.txt',
    'aliases': 'synth.aliases.txt',
    'p2a': 'synth.p2a.txt',
}


@dataclass
class SyntheticBundle:
    seed: int
    tiers: dict                                     # ASN -> 1, 2 ou 3
    edges: list = field(default_factory=list)       # RelationshipEdge
    countries: dict = field(default_factory=dict)
    censors: tuple = ()
    targets: list = field(default_factory=list)     # TargetPrefix
    rib: list = field(default_factory=list)         # RibEntry
    traces: list = field(default_factory=list)      # RouterTrace
    alias_groups: list = field(default_factory=list)
    p2a: list = field(default_factory=list)         # (préfixe, ASN)
    router_asns: list = field(default_factory=list)

    @property
    def asns(self):
        return sorted(self.tiers)

    def files(self):
        """Nom de fichier -> lignes."""
        return {
            FILES['rels']: [format_relationship(edge) for edge in self.edges],
            FILES['rib']: format_rib(self.rib),
            FILES['prefixes']: [format_target_prefix(target) for target in self.targets],
            FILES['countries']: format_as_countries(self.countries),
            FILES['censors']: list(self.censors),
            FILES['traces']: [format_trace(trace) for trace in self.traces],
            FILES['aliases']: [' '.join(group) for group in self.alias_groups],
            FILES['p2a']: format_prefix_to_as(self.p2a),
        }

    def run_config_lines(self):
        lines = [f"{key} = {FILES[key]}" for key in sorted(FILES)]
        lines.append(f"seed = {self.seed}")
        lines.append(f"asn = {','.join(str(asn) for asn in self.router_asns)}")
        return lines


class TopologyGenerator:
    """Trois niveaux: noyau de tier-1 en pairs, tier-2 multi-connectés, AS de bordure."""

    def __init__(self, seed=config.SYNTH_SEED, n_ases=config.SYNTH_AS_COUNT,
                 n_prefixes=config.SYNTH_PREFIXES, n_vantage=config.SYNTH_VANTAGE_POINTS,
                 n_traces=config.SYNTH_TRACES):
        self.seed = seed
        self.rng = np.random.default_rng(seed)
        self.n_ases = max(n_ases, config.SYNTH_TIER1 + 2)
        self.n_prefixes = n_prefixes
        self.n_vantage = n_vantage
        self.n_traces = n_traces

    # ---------- niveau AS ----------
    def _tiers(self):
        n_tier1 = config.SYNTH_TIER1
        n_tier2 = max(1, int(self.n_ases * config.SYNTH_TIER2_FRACTION))
        tiers = {}
        for index in range(self.n_ases):
            asn = ASN_BASE + index
            tiers[asn] = 1 if index < n_tier1 else 2 if index < n_tier1 + n_tier2 else 3
        return tiers

    def _providers_for(self, candidates):
        n_providers = 2 if self.rng.random() < config.SYNTH_MULTIHOMING_PROB else 1
        n_providers = min(n_providers, len(candidates))
        picked = self.rng.choice(len(candidates), size=n_providers, replace=False)
        return sorted(candidates[i] for i in picked)

    def _edges(self, tiers):
        by_tier = {level: [asn for asn in sorted(tiers) if tiers[asn] == level] for level in (1, 2, 3)}
        edges = []
        tier1 = by_tier[1]
        for i, first in enumerate(tier1):
            for second in tier1[i + 1:]:
                edges.append(RelationshipEdge(first, second, PEER_CODE))
        placed_tier2 = []
        for asn in by_tier[2]:
            pool = tier1 + placed_tier2 if placed_tier2 and self.rng.random() < 0.3 else tier1
            for provider in self._providers_for(pool):
                edges.append(RelationshipEdge(provider, asn, PROVIDER_CODE))
            placed_tier2.append(asn)
        tier2 = by_tier[2]
        peered = {tuple(sorted((e.first, e.second))) for e in edges}
        for i, first in enumerate(tier2):
            for second in tier2[i + 1:]:
                if (first, second) not in peered and self.rng.random() < config.SYNTH_PEERING_PROB:
                    edges.append(RelationshipEdge(first, second, PEER_CODE))
        for asn in by_tier[3]:
            pool = tier2 if self.rng.random() < 0.9 else tier1
            for provider in self._providers_for(pool):
                edges.append(RelationshipEdge(provider, asn, PROVIDER_CODE))
        return edges

    def _countries(self, asns):
        pool = config.SYNTH_COUNTRIES
        picks = self.rng.integers(0, len(pool), size=len(asns))
        return {asn: pool[pick] for asn, pick in zip(asns, picks)}

    def _targets(self, tiers):
        homes = [asn for asn in sorted(tiers) if tiers[asn] >= 2]
        chosen = self.rng.choice(len(homes), size=min(self.n_prefixes, len(homes)), replace=False)
        targets = []
        for index, pick in enumerate(chosen):
            prefix = ipaddress.IPv4Network(f"100.{64 + index // 256}.{index % 256}.0/24")
            targets.append((TargetPrefix(prefix=prefix, label=f"site-{index + 1:02d}"), homes[pick]))
        return targets

    # ---------- niveau routeur ----------
    def _router_plan(self, asns):
        """ASN -> (routeurs de bordure, routeurs de cœur); un routeur = ses interfaces."""
        plan = {}
        for index, asn in enumerate(asns):
            block = ipaddress.IPv4Network(f"10.{index // 256}.{index % 256}.0/24")
            hosts = iter(block.hosts())
            n_edge = int(self.rng.integers(2, 8))
            n_core = int(self.rng.integers(1, 9))
            routers = []
            for _ in range(n_edge + n_core):
                n_interfaces = 2 if self.rng.random() < config.SYNTH_ALIAS_PROB else 1
                routers.append(tuple(str(next(hosts)) for _ in range(n_interfaces)))
            plan[asn] = (block, routers[:n_edge], routers[n_edge:])
        return plan

    def _pick(self, routers):
        router = routers[int(self.rng.integers(0, len(routers)))]
        return router[int(self.rng.integers(0, len(router)))]

    def _hop(self, address):
        return GAP if self.rng.random() < config.SYNTH_GAP_PROB else address

    def _trace(self, as_path, plan, destination):
        hops = []
        for position, asn in enumerate(as_path):
            _, edge, core = plan[asn]
            hops.append(self._hop(self._pick(edge)))
            for _ in range(int(self.rng.integers(0, 4))):
                hops.append(self._hop(self._pick(core)))
            if position < len(as_path) - 1:
                hops.append(self._hop(self._pick(edge)))
        return RouterTrace(source=f"vp-{as_path[0]}", destination=destination, hops=tuple(hops))

    # ---------- assemblage ----------
    def generate(self):
        tiers = self._tiers()
        asns = sorted(tiers)
        edges = self._edges(tiers)
        graph = build_graph(edges)
        countries = self._countries(asns)
        targets = self._targets(tiers)

        vantage = sorted(asns[i] for i in self.rng.choice(len(asns), size=min(self.n_vantage, len(asns)),
                                                          replace=False))
        rib, routes = [], {}
        for target, home in targets:
            seed_path = SurePath(prefix=target.prefix, hops=(home,), frequency_index=1)
            paths, _ = infer_paths(target.prefix, {home: [seed_path]}, graph)
            routes[target.prefix] = paths
            for asn in vantage:
                if asn in paths:
                    rib.append(RibEntry(prefix=target.prefix, as_path=paths[asn].hops,
                                        source_vantage=f"vp-{asn}"))

        plan = self._router_plan(asns)
        traces, traversed = [], Counter()
        for _ in range(self.n_traces):
            target, _ = targets[int(self.rng.integers(0, len(targets)))]
            source = asns[int(self.rng.integers(0, len(asns)))]
            path = routes[target.prefix].get(source)
            if path is None:
                continue
            destination = str(target.prefix.network_address + 1)
            traces.append(self._trace(path.hops, plan, destination))
            traversed.update(path.hops)

        alias_groups = sorted(
            tuple(sorted(router))
            for _, edge, core in (plan[asn] for asn in asns)
            for router in edge + core if len(router) > 1
        )
        p2a = [(plan[asn][0], asn) for asn in asns]
        p2a.extend((target.prefix, home) for target, home in targets)

        bundle = SyntheticBundle(
            seed=self.seed, tiers=tiers, edges=edges, countries=countries,
            censors=tuple(sorted(config.SYNTH_CENSORS)),
            targets=[target for target, _ in targets], rib=rib, traces=traces,
            alias_groups=[list(group) for group in alias_groups],
            p2a=sorted(p2a, key=lambda item: (int(item[0].network_address), item[0].prefixlen)),
            router_asns=sorted(asn for asn, _ in sorted(traversed.items(), key=lambda item: (-item[1], item[0]))[:3]),
        )
        logger.info("synthèse: %d AS, %d relations, %d entrées RIB, %d traces",
                    len(asns), len(edges), len(rib), len(traces))
        return bundle


def generate_bundle(seed=config.SYNTH_SEED, **sizes):
    return TopologyGenerator(seed=seed, **sizes).generate()


def write_bundle(bundle, output_dir):
    """Écrit les fichiers d'entrée et un run.conf qui les référence."""
    written = []
    for filename, lines in bundle.files().items():
        path = os.path.join(output_dir, filename)
        write_lines(path, lines)
        written.append(path)
    config_path = os.path.join(output_dir, config.RUN_CONFIG_FILE)
    write_lines(config_path, bundle.run_config_lines())
    written.append(config_path)
    return written
