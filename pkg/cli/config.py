#!/usr/bin/env python3

"""
A module for the run configuration.

The configuration is INI text with the sections [constants], [basis],
[potential] and [solver]; every key is optional. Values are validated by
pydantic models and then by the domain objects they are turned into, and any
error names the offending key as `section.key`.
"""

# stdlib modules
import logging
import configparser

# third party modules
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

# inner modules
from basis.sturmian import CsBasisSpec
from hamiltonian import const as hconst
from hamiltonian.physics import PhysicalConstants
from potentials.models import PotentialModel, parseTerms, renderTerms
from potentials.lowrank import DEFAULT_COND_LIMIT
from solver import const as sconst
from solver.states import SearchWindow
from cli import const
from cli.apputils import parseOverride

# exceptions
from cli.exceptions import *
from basis.exceptions import InvalidBasisSpecException
from hamiltonian.exceptions import InvalidConstantsException, InvalidLongRangeException
from potentials.exceptions import InvalidPotentialTermException
from solver.exceptions import InvalidSearchWindowException

# typing
from typing import Dict, Iterable, Literal, Optional, Tuple

class Section(BaseModel):
    """ Base of the configuration sections: unknown keys are rejected, values are immutable. """

    model_config = ConfigDict(extra='forbid', frozen=True)

class ConstantsConfig(Section):
    m: float = Field(hconst.DEFAULT_MASS, gt=0)
    hbar: float = Field(hconst.DEFAULT_HBAR, gt=0)
    c: float = Field(hconst.DEFAULT_C, gt=0)
    e2: float = Field(hconst.DEFAULT_E2, gt=0)

    def physical (self) -> PhysicalConstants:
        return PhysicalConstants(m=self.m, hbar=self.hbar, c=self.c, e2=self.e2)

class BasisConfig(Section):
    l: int = Field(0, ge=0)
    b: float = Field(1.0, gt=0)
    n_short: int = Field(32, ge=1)
    n_big: Optional[int] = Field(None, ge=1)
    n_cf_start: Optional[int] = Field(None, ge=2)

    def spec (self, confining: bool) -> CsBasisSpec:
        """
        Returns the basis specification; the continued-fraction depth defaults to
        2000 with confinement and 5000 without.

        :param confining: whether the long-range potential confines
        """
        depth = self.n_cf_start
        if depth is None:
            depth = const.DEPTH_CONFINEMENT if confining else const.DEPTH_COULOMB
        return CsBasisSpec(l=self.l, b=self.b, n_short=self.n_short, n_big=self.n_big, n_cf_start=depth)

class PotentialConfig(Section):
    z: float = 0.0
    alpha1: float = Field(0.0, ge=0)
    alpha2: float = Field(0.0, ge=0)
    s1: float = Field(0.0, ge=0)
    v4_short: str = ''
    v0_short: str = ''
    cond_limit: float = Field(DEFAULT_COND_LIMIT, gt=1)
    low_rank: bool = True

    @field_validator('v4_short', 'v0_short')
    @classmethod
    def canonicalTerms (cls, value: str) -> str:
        try:
            return renderTerms(parseTerms(value))
        except InvalidPotentialTermException as e:
            raise ValueError(e.message) from e

    @property
    def confining (self) -> bool:
        return bool(self.alpha1 or self.alpha2 or self.s1)

    def model (self) -> PotentialModel:
        return PotentialModel(z=self.z, alpha1=self.alpha1, alpha2=self.alpha2, s1=self.s1,
                              v4_short=parseTerms(self.v4_short), v0_short=parseTerms(self.v0_short))

class SolverConfig(Section):
    model_config = ConfigDict(extra='forbid', frozen=True, arbitrary_types_allowed=True)

    mode: Literal['bound', 'resonance', 'both'] = 'bound'
    relativistic: Literal['fv0', 'schrodinger', 'both'] = 'fv0'
    re_min: float = -10.0
    re_max: float = 10.0
    im_min: float = -1.0
    im_max: float = Field(0.0, le=0)
    initial_guesses: Tuple[complex, ...] = ()
    max_roots: int = Field(10, ge=1)
    grid_points: int = Field(sconst.GRID_POINTS, ge=3)
    root_tolerance: float = Field(sconst.ROOT_TOLERANCE, gt=0)
    depth_tolerance: float = Field(sconst.DEPTH_TOLERANCE, gt=0)
    cf_tolerance: float = Field(1e-12, gt=0)
    seed_policy: Optional[Literal['zero', 'coulomb_tail']] = None
    strict: bool = False

    @field_validator('initial_guesses', mode='before')
    @classmethod
    def parseGuesses (cls, value: object) -> Tuple[complex, ...]:
        if isinstance(value, str):
            items = [item.strip() for item in value.split(',') if item.strip()]
            try:
                return tuple(complex(item.replace(' ', '')) for item in items)
            except ValueError as e:
                raise ValueError(f'cannot read {value!r} as complex numbers') from e
        return tuple(complex(item) for item in value)

    @property
    def paths (self) -> Tuple[str, ...]:
        """ Solver paths to run, Schroedinger first. """
        if self.relativistic == 'both':
            return (const.PATH_SCHRODINGER, const.PATH_FV0)
        return (self.relativistic,)

    def window (self) -> SearchWindow:
        return SearchWindow(re_min=self.re_min, re_max=self.re_max, im_min=self.im_min, im_max=self.im_max,
                            initial_guesses=self.initial_guesses, max_roots=self.max_roots)

class RunConfig(Section):
    constants: ConstantsConfig = Field(default_factory=ConstantsConfig)
    basis: BasisConfig = Field(default_factory=BasisConfig)
    potential: PotentialConfig = Field(default_factory=PotentialConfig)
    solver: SolverConfig = Field(default_factory=SolverConfig)

    def spec (self) -> CsBasisSpec:
        return self.basis.spec(self.potential.confining)

    def checkInvariants (self) -> None:
        """ Builds every domain object once so that their invariants are checked at parse time. """

        try:
            consts = self.constants.physical()
        except InvalidConstantsException as e:
            raise ConfigValueException(f'constants.{e.name}', e.message) from e
        try:
            self.spec()
        except InvalidBasisSpecException as e:
            raise ConfigValueException(f'basis.{e.field}', e.message) from e
        try:
            model = self.potential.model()
            for path in self.solver.paths:
                model.longRange(consts, relativistic=path == const.PATH_FV0)
        except (InvalidPotentialTermException, InvalidLongRangeException) as e:
            raise ConfigValueException('potential', e.message) from e
        try:
            self.solver.window()
        except InvalidSearchWindowException as e:
            raise ConfigValueException(f'solver.{e.field}', e.message) from e

        if self.solver.seed_policy == 'coulomb_tail' and self.potential.confining:
            raise ConfigValueException('solver.seed_policy', 'coulomb_tail is only available without confinement')

def _sections (text: str) -> Dict[str, Dict[str, str]]:
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=('#', ';'))
    try:
        parser.read_string(text)
    except configparser.Error as e:
        errors = getattr(e, 'errors', None)
        line = errors[0][0] if errors else getattr(e, 'lineno', None)
        raise ConfigParseException(line, message=f'Cannot parse configuration at line {line}: {e.message}') from e

    return {section: dict(parser.items(section)) for section in parser.sections()}

def parseConfig (text: str, overrides: Iterable[str] = ()) -> RunConfig:
    """
    Returns the validated configuration.

    :param text: INI text
    :param overrides: `section.key=value` items applied on top of the text
    """

    sections = _sections(text)
    for override in overrides:
        section, key, value = parseOverride(override)
        sections.setdefault(section, {})[key] = value

    try:
        config = RunConfig.model_validate(sections)
    except ValidationError as e:
        error = e.errors()[0]
        key = '.'.join(str(part) for part in error['loc'])
        raise ConfigValueException(key, error['msg']) from e

    config.checkInvariants()
    logging.debug(f'Configuration parsed: {config!r}')
    return config

def parseConfigFile (path: str, overrides: Iterable[str] = ()) -> RunConfig:
    """
    Reads and validates a configuration file.

    :param path: path of the INI file
    :param overrides: `section.key=value` items
    """
    with open(path, 'r', encoding='utf-8') as file:
        return parseConfig(file.read(), overrides)

def _render (value: object) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, tuple):
        return ', '.join(repr(item) for item in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)

def renderConfig (config: RunConfig) -> str:
    """
    Returns the canonical text of a configuration; keys left at None are omitted.

    :param config: configuration
    """

    lines = []
    for section in const.SECTIONS:
        lines.append(f'[{section}]')
        for key, value in getattr(config, section).model_dump().items():
            if value is None:
                continue
            lines.append(f'{key} = {_render(value)}'.rstrip())
        lines.append('')
    return '\n'.join(lines)
