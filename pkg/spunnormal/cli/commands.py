#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from functools import cached_property
from typing import List, Sequence, Tuple

from spunnormal.angles import angle_polytope, certify_essential, dual_surfaces
from spunnormal.builder import build_degeneration
from spunnormal.constants import EXIT_OK, EXIT_VALIDATION
from spunnormal.context import Config, MalformedDocument, ValidationError
from spunnormal.equations import (ShapeAssignment, evaluate_row, gluing_system, qmatching_direct, qmatching_from_A,
                                  slope_functionals)
from spunnormal.fixtures import companion_of
from spunnormal.hull import rref
from spunnormal.logging import get_logger
from spunnormal.registry import COMMANDS
from spunnormal.surfaces import (PFComplex, VertexRow, arc_midpoints, boundary_coordinate, boundary_functionals,
                                 center_point, enumerate_pf, is_admissible, load_reference, match_reference, orbits,
                                 read_vertex_table, satisfies_matching, write_vertex_table)
from spunnormal.tri import (cusp_stabilizer, induced_quad_permutation, load_triangulation, require_torus_cusps,
                            symmetries, trace_cusp_classes, trace_edge_classes)
from spunnormal.tropical import correspondence_report, log_limit_probe, prevariety, xi_to_normal
from spunnormal.utils import MultiTimer

from .formatting import format_complex, render_records, render_report

__all__ = [
    'BaseCommand', 'ValidateCommand', 'EquationsCommand', 'VerticesCommand', 'SlopesCommand', 'OrbitsCommand',
    'CertifyCommand', 'PrevarietyCommand', 'CorrespondCommand', 'ProbeCommand', 'VerifyCommand', 'COMMAND_TYPES',
    'parse_shapes', 'parse_ids'
]


def parse_shapes(text: str) -> Tuple[complex, ...]:
    """``'i,i,0.5-2i'`` as complex numbers."""
    try:
        return tuple(complex(token.strip().replace('i', 'j')) for token in text.split(','))
    except ValueError as e:
        raise ValidationError(f'cannot read shapes {text!r}: {e}') from e


def parse_ids(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(token) for token in text.split(',') if token.strip())
    except ValueError as e:
        raise ValidationError(f'cannot read surface ids {text!r}: {e}') from e


class BaseCommand:
    """One subcommand of the command line. Subclasses implement :meth:`execute`, which returns the text
    written to stdout, and are registered in :data:`spunnormal.registry.COMMANDS`.

    Intermediate results are computed lazily and shared between the steps of a command.
    """

    def __init__(self, config: Config):
        self.config = config
        self.logger = get_logger()
        self.timer = MultiTimer()
        self.status = EXIT_OK

    @property
    def fmt(self) -> str:
        return self.config.output.format

    @property
    def digits(self) -> int:
        return self.config.output.float_digits

    @cached_property
    def triangulation(self):
        with self.timer.stage('parse', self.logger):
            T = load_triangulation(self.config.input)
        edges, cusps = trace_edge_classes(T), trace_cusp_classes(T)
        self.logger.info(f'read {T.name or self.config.input}: {T.n} tetrahedra, {len(edges)} edges, '
                         f'{len(cusps)} cusps')
        return T

    def _companion(self, kind: str):
        given = self.config.get(kind)
        return given if given is not None else companion_of(self.config.input, kind)

    @cached_property
    def system(self):
        return gluing_system(self.triangulation, self._companion('nz'))

    @cached_property
    def reference(self):
        source = self._companion('reference')
        return load_reference(source) if source is not None else None

    @cached_property
    def matching(self) -> List[Tuple[int, ...]]:
        require_torus_cusps(self.triangulation)
        return qmatching_direct(self.triangulation)

    @cached_property
    def numbered(self) -> Tuple[PFComplex, Tuple[int, ...]]:
        """The admissible solution space and the id of each vertex."""
        with self.timer.stage('enumerate', self.logger):
            pf = enumerate_pf(self.matching,
                              self.triangulation.n,
                              num_threads=self.config.num_threads,
                              progress=self.config.progress)
        if self.reference is None:
            return pf, tuple(range(1, len(pf.vertices) + 1))
        matched = match_reference(pf, self.reference)
        if matched.missing:
            self.logger.warning(f'reference vertices {list(matched.missing)} are not vertex solutions')
        return matched.pf, matched.ids

    @property
    def pf(self) -> PFComplex:
        return self.numbered[0]

    @property
    def ids(self) -> Tuple[int, ...]:
        return self.numbered[1]

    def surface(self, vertex_id: int) -> Tuple[int, ...]:
        if vertex_id not in self.ids:
            raise ValidationError(f'no vertex surface with id {vertex_id}')
        return self.pf.vertices[self.ids.index(vertex_id)]

    @cached_property
    def functionals(self):
        return boundary_functionals(self.system.peripheral_rows)

    def vertex_rows(self) -> List[VertexRow]:
        rows = []
        for vid, x in zip(self.ids, self.pf.vertices):
            boundary = boundary_coordinate(x, self.functionals).flat() if self.functionals else None
            rows.append(VertexRow(id=vid, coordinate=x, boundary=boundary))
        return sorted(rows, key=lambda r: r.id)

    def execute(self) -> str:
        raise NotImplementedError


@COMMANDS.register_module
class ValidateCommand(BaseCommand):
    name = 'validate'

    def execute(self) -> str:
        T = self.triangulation
        records = [dict(kind='edge', id=e.id, size=e.degree, euler=None) for e in trace_edge_classes(T)]
        cusps = require_torus_cusps(T)
        records += [dict(kind='cusp', id=c.id, size=len(c.vertices), euler=c.link_euler) for c in cusps]
        return render_records(records, self.fmt, self.digits)


@COMMANDS.register_module
class EquationsCommand(BaseCommand):
    """Gluing and peripheral rows, the Q-matching rows computed both ways, and where the two disagree."""
    name = 'equations'

    def execute(self) -> str:
        G = self.system
        rows = [('edge', f'e{i}', r) for i, r in enumerate(G.edge_rows)]
        for curves in G.peripheral_rows:
            rows.append(('meridian', f'M{curves.cusp}', curves.meridian))
            rows.append(('longitude', f'L{curves.cusp}', curves.longitude))

        at = self.config.get('at')
        Z = ShapeAssignment(parse_shapes(at)) if at is not None else None
        if Z is not None and Z.n != self.triangulation.n:
            raise ValidationError(f'expected {self.triangulation.n} shapes, but got {Z.n}')
        records = []
        for kind, label, r in rows:
            record = dict(kind=kind, label=label, row=r.describe())
            if Z is not None:
                record['value'] = format_complex(evaluate_row(r, Z), self.digits)
            records.append(record)

        from_A = qmatching_from_A(G)
        for kind, prefix, matrix in (('matching_A', 'A', from_A), ('matching_direct', 'B', self.matching)):
            records.extend(dict(kind=kind, label=f'{prefix}{i}', row=row) for i, row in enumerate(matrix))
        dim = 3 * self.triangulation.n
        reduced_A, reduced_direct = rref(from_A, dim)[0], rref(self.matching, dim)[0]
        differing = dict(rows=_differing(from_A, self.matching), reduced=_differing(reduced_A, reduced_direct))
        if any(differing.values()):
            self.logger.warning(f'Q-matching rows disagree: {differing}', stage='equations')
        records.extend(dict(kind='diff', label=label, row=indices) for label, indices in differing.items())
        if Z is not None:
            for record in records:
                record.setdefault('value', None)
        return render_records(records, self.fmt, self.digits)


def _differing(first: Sequence, second: Sequence) -> Tuple[int, ...]:
    """Indices where two row lists disagree, rows missing from the shorter list included."""
    return tuple(i for i in range(max(len(first), len(second)))
                 if i >= len(first) or i >= len(second) or tuple(first[i]) != tuple(second[i]))


@COMMANDS.register_module
class VerticesCommand(BaseCommand):
    name = 'vertices'

    def execute(self) -> str:
        rows = self.vertex_rows()
        extra = dict(matching=self.matching) if self.fmt == 'json' else {}
        return write_vertex_table(rows, self.fmt, **extra)


@COMMANDS.register_module
class SlopesCommand(BaseCommand):
    name = 'slopes'

    def execute(self) -> str:
        if not self.system.peripheral_rows:
            raise ValidationError('slopes need peripheral curves, pass an NZ document with --nz')
        records = []
        for curves in self.system.peripheral_rows:
            labels = [f'L{curves.cusp}', f'M{curves.cusp}']
            for label, fn in zip(labels, slope_functionals([curves.longitude, curves.meridian], labels)):
                records.append(dict(curve=label, cusp=curves.cusp, functional=fn.describe()))
        return render_records(records, self.fmt, self.digits)


@COMMANDS.register_module
class OrbitsCommand(BaseCommand):
    name = 'orbits'

    def execute(self) -> str:
        T = self.triangulation
        with self.timer.stage('symmetries', self.logger):
            group = symmetries(T, num_threads=self.config.num_threads)
        if self.config.get('subgroup', 'full') == 'cusp':
            group = cusp_stabilizer(T, group, trace_cusp_classes(T))
        partition = orbits(self.pf, [induced_quad_permutation(s) for s in group])
        named = [sorted(self.ids[i] for i in orbit) for orbit in partition]
        centre = center_point(self.pf)
        doc = dict(group_order=len(group),
                   orbits=[dict(size=len(orbit), vertices=orbit) for orbit in sorted(named)],
                   arc_midpoints=[
                       dict(vertices=sorted([self.ids[a], self.ids[b]]), midpoint=point)
                       for a, b, point in arc_midpoints(self.pf, partition)
                   ],
                   centre=centre)
        return render_report(doc, self.fmt, self.digits)


@COMMANDS.register_module
class CertifyCommand(BaseCommand):
    name = 'certify'

    def execute(self) -> str:
        ids = parse_ids(self.config.get('surfaces') or '')
        surfaces = [self.surface(i) for i in ids]
        P = angle_polytope(self.triangulation, self.system.edge_rows)
        report = certify_essential(surfaces, P, strict=self.config.strict, surface_ids=ids)
        doc = report.to_dict()
        if report.feasible:
            doc['dual_to'] = sorted(self.ids[i] for i in dual_surfaces(report.alpha, self.pf.vertices))
        return render_report(doc, self.fmt, self.digits)


@COMMANDS.register_module
class PrevarietyCommand(BaseCommand):
    name = 'prevariety'

    def execute(self) -> str:
        with self.timer.stage('prevariety', self.logger):
            pre = prevariety(self.triangulation, num_threads=self.config.num_threads, progress=self.config.progress)
        lookup = dict(zip(self.pf.vertices, self.ids))
        doc = dict(num_tetrahedra=pre.n,
                   cell_counts=pre.cell_counts(),
                   rays=[dict(xi=r, normal=xi_to_normal(r), vertex=lookup.get(xi_to_normal(r))) for r in pre.rays],
                   cones=pre.to_dict()['cones'] if self.fmt == 'json' else [
                       dict(vertices=sorted(lookup.get(x) for x in cell)) for cell in pre.cells_under_N()
                   ],
                   note='the logarithmic limit set is contained in the pre-variety, possibly strictly')
        return render_report(doc, self.fmt, self.digits)


@COMMANDS.register_module
class CorrespondCommand(BaseCommand):
    name = 'correspond'

    def execute(self) -> str:
        pre = prevariety(self.triangulation, num_threads=self.config.num_threads, progress=self.config.progress)
        report = correspondence_report(pre, self.pf)
        doc = report._asdict()
        doc['rays'] = len(pre.rays)
        doc['vertices'] = len(self.pf.vertices)
        return render_report(doc, self.fmt, self.digits)


@COMMANDS.register_module
class ProbeCommand(BaseCommand):
    name = 'probe'

    def execute(self) -> str:
        spec = dict(type=self.config.get('path') or 'EqualGrowthPath')
        if self.config.get('limit') is not None:
            try:
                spec['limit'] = int(self.config.limit)
            except ValueError as e:
                raise ValidationError(f'limit must be an integer, but got {self.config.limit!r}') from e
        try:
            path = build_degeneration(spec)
        except (NameError, AssertionError, TypeError) as e:
            raise ValidationError(f'cannot build shape path {spec}: {e}') from e
        probe = self.config.probe
        result = log_limit_probe(path,
                                 samples=probe.samples,
                                 start=probe.start,
                                 ratio=probe.ratio,
                                 tolerance=probe.tolerance,
                                 guard_digits=probe.guard_digits)
        doc = dict(path=repr(path),
                   samples=result.samples,
                   divergent=result.divergent,
                   converged=result.converged,
                   indicator=result.indicator,
                   direction=result.direction,
                   secant=result.secant)
        if path.expected_xi is not None:
            doc['expected_xi'] = path.expected_xi
            doc['expected_normal'] = xi_to_normal(path.expected_xi)
            doc['angle'] = result.angle_to(path.expected_xi)
        return render_report(doc, self.fmt, self.digits)


@COMMANDS.register_module
class VerifyCommand(BaseCommand):
    """Re-checks a ``vertices --format json`` dump without the triangulation."""
    name = 'verify'

    def execute(self) -> str:
        dump = read_vertex_table(self.config.input)
        if dump.matching is None:
            raise MalformedDocument('the dump carries no matching rows to verify against')
        records = []
        for row in dump.rows:
            admissible = is_admissible(row.coordinate, dump.n)
            matching = satisfies_matching(dump.matching, row.coordinate)
            records.append(dict(vertex=row.id, admissible=admissible, matching=matching))
            if not (admissible and matching):
                self.status = EXIT_VALIDATION
        return render_records(records, self.fmt, self.digits)


COMMAND_TYPES = {cls.name: cls.__name__ for cls in BaseCommand.__subclasses__()}
