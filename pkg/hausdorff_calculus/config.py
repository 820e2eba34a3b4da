import hausdorff_calculus.core as core
import hausdorff_calculus.errors as errors
import hausdorff_calculus.integrals as integrals
import hausdorff_calculus.vecops as vecops

import configparser
import dataclasses
import logging
import re


logger = logging.getLogger(__name__)

COMMANDS = ('verify', 'solve', 'table', 'errata')
FORMATS = ('csv', 'json')
EQUATIONS = ('diffusion', 'burgers')
PROBLEMS = ('heat_mode', 'constant', 'mms', 'pulse')
BOUNDARIES = ('default', 'dirichlet', 'reflective')


def _mu_list(text):
    values = [part for part in re.split(r'[,\s]+', str(text).strip()) if part]
    if not values:
        raise ValueError('at least one fractal dimension is required')
    mus = []
    for value in values:
        try:
            mus.append(core.as_dimension(float(value)).mu)
        except errors.HausdorffException as e:
            raise ValueError(str(e))
    return tuple(sorted(set(mus)))


def _conventions(text):
    text = str(text).strip().lower()
    if text == 'both':
        return (vecops.Convention.MAPPED_CONSISTENT, vecops.Convention.PAPER_LITERAL)
    try:
        return (vecops.Convention.parse(text),)
    except ValueError:
        raise ValueError('convention must be paper, mapped or both, got {}'.format(text))


def _choice(choices):
    def parse(text):
        text = str(text).strip().lower()
        if text not in choices:
            raise ValueError('expected one of {}, got {}'.format(', '.join(choices), text))
        return text
    return parse


def _positive_int(text):
    value = int(str(text).strip())
    if value < 1:
        raise ValueError('expected a positive integer, got {}'.format(value))
    return value


def _positive_float(text):
    value = float(str(text).strip())
    if not value > 0.0:
        raise ValueError('expected a positive number, got {}'.format(value))
    return value


def _optional_float(text):
    text = str(text).strip().lower()
    if text in ('', 'auto', 'none'):
        return None
    return _positive_float(text)


def _boolean(text):
    if isinstance(text, bool):
        return text
    text = str(text).strip().lower()
    if text in ('1', 'true', 'yes', 'on'):
        return True
    if text in ('0', 'false', 'no', 'off'):
        return False
    raise ValueError('expected a boolean, got {}'.format(text))


def _interval(text):
    if text is None or str(text).strip().lower() in ('', 'default', 'none'):
        return None
    parts = [part for part in re.split(r'[,\s]+', str(text).strip()) if part]
    if len(parts) != 2:
        raise ValueError('expected a,b, got {}'.format(text))
    a, b = float(parts[0]), float(parts[1])
    if a < 0.0 or not a < b:
        raise ValueError('expected 0 <= a < b, got {},{}'.format(a, b))
    return (a, b)


def _times(text):
    parts = [part for part in re.split(r'[,\s]+', str(text).strip()) if part]
    return tuple(sorted(float(part) for part in parts))


# (section, key) -> (parser, default)
SCHEMA = {
    ('run', 'mu'): (_mu_list, (0.5, 1.0)),
    ('run', 'convention'): (_conventions, (vecops.Convention.MAPPED_CONSISTENT, vecops.Convention.PAPER_LITERAL)),
    ('run', 'seed'): (int, 0),
    ('run', 'out'): (str, None),
    ('run', 'format'): (_choice(FORMATS), 'json'),
    ('run', 'jobs'): (_positive_int, 1),
    ('quadrature', 'points'): (_positive_int, 8),
    ('quadrature', 'panels'): (_positive_int, 4),
    ('quadrature', 'budget'): (_positive_int, 10 ** 8),
    ('solver', 'equation'): (_choice(EQUATIONS), 'diffusion'),
    ('solver', 'problem'): (_choice(PROBLEMS), 'heat_mode'),
    ('solver', 'domain'): (_interval, None),
    ('solver', 'nodes'): (_positive_int, 200),
    ('solver', 'dt'): (_optional_float, None),
    ('solver', 'auto_cfl'): (_boolean, None),
    ('solver', 't_end'): (_positive_float, 0.1),
    ('solver', 'theta'): (_positive_float, 1.0),
    ('solver', 'snapshots'): (_times, ()),
    ('solver', 'levels'): (_positive_int, 1),
    ('solver', 'boundary'): (_choice(BOUNDARIES), 'default'),
}


@dataclasses.dataclass(frozen=True)
class SolverConfig:
    """ Parameters of a 1-D solver run """

    equation: str = 'diffusion'
    problem: str = 'heat_mode'
    domain: tuple = None
    nodes: int = 200
    dt: float = None
    t_end: float = 0.1
    theta: float = 1.0
    snapshots: tuple = ()
    levels: int = 1
    boundary: str = 'default'

    def to_dict(self):
        """ Gets the parameters as a plain dictionary """

        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """ Everything a command needs; identical configs with identical seeds give identical payloads """

    command: str
    mus: tuple
    conventions: tuple
    quad: integrals.QuadratureSpec
    seed: int = 0
    out: str = None
    fmt: str = 'json'
    jobs: int = 1
    solver: SolverConfig = SolverConfig()

    def manifest(self, version):
        """ Gets the reproducibility manifest embedded in every report """

        return {
            'version': version,
            'command': self.command,
            'mu': list(self.mus),
            'convention': [c.label for c in self.conventions],
            'quadrature': self.quad.label,
            'seed': self.seed,
            'solver': self.solver.to_dict() if self.command == 'solve' else None,
        }


def _line_of(text, section, key):
    """ Gets the 1-based line of `key` inside `[section]`, if it can be found """

    current = None
    for number, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        header = re.match(r'^\[(.+)\]$', stripped)
        if header:
            current = header.group(1).strip().lower()
        elif current == section and re.match(r'^{}\s*[=:]'.format(re.escape(key)), stripped, re.IGNORECASE):
            return number
    return None


def read_config_file(path):
    """ Reads an INI-style config file into {(section, key): parsed value} """

    try:
        with open(path, encoding='utf-8') as config_file:
            text = config_file.read()
    except OSError as e:
        raise errors.ConfigException('cannot read config file: {}'.format(e))

    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text, source=str(path))
    except configparser.Error as e:
        raise errors.ConfigException(str(e).splitlines()[0], line=getattr(e, 'lineno', None))

    values = {}
    for section in parser.sections():
        name = section.strip().lower()
        if name not in {s for s, _ in SCHEMA}:
            raise errors.ConfigException('unknown section', section=name)
        for key, raw in parser.items(section):
            values[(name, key)] = parse_value(name, key, raw, _line_of(text, name, key))
    logger.debug('Read %d settings from %s', len(values), path)
    return values


def parse_value(section, key, raw, line=None):
    """ Parses one setting, raising ConfigException naming its location """

    try:
        parse, _ = SCHEMA[(section, key)]
    except KeyError:
        raise errors.ConfigException('unknown key', section=section, key=key, line=line)
    try:
        return parse(raw)
    except (ValueError, TypeError) as e:
        raise errors.ConfigException(str(e) or 'invalid value {!r}'.format(raw), section=section, key=key, line=line)


def build_config(command, file_values=None, overrides=None):
    """
    Builds the RunConfig of a command from defaults, config file values and command-line
    overrides (raw values keyed by (section, key); None means not given), in that order
    """

    if command not in COMMANDS:
        raise errors.ConfigException('unknown command {}'.format(command))

    values = {location: default for location, (_, default) in SCHEMA.items()}
    values.update(file_values or {})
    for (section, key), raw in (overrides or {}).items():
        if raw is not None:
            values[(section, key)] = parse_value(section, key, raw)

    try:
        quad = integrals.QuadratureSpec(values[('quadrature', 'points')], values[('quadrature', 'panels')],
                                        values[('quadrature', 'budget')])
    except errors.HausdorffException as e:
        raise errors.ConfigException(e.message, section='quadrature')

    dt = values[('solver', 'dt')]
    auto_cfl = values[('solver', 'auto_cfl')]
    if auto_cfl and dt is not None:
        raise errors.ConfigException('dt and auto_cfl are mutually exclusive', section='solver', key='dt')
    if auto_cfl is False and dt is None:
        raise errors.ConfigException('a time step is required without auto_cfl', section='solver', key='dt')

    solver = SolverConfig(
        equation=values[('solver', 'equation')],
        problem=values[('solver', 'problem')],
        domain=values[('solver', 'domain')],
        nodes=values[('solver', 'nodes')],
        dt=dt,
        t_end=values[('solver', 't_end')],
        theta=values[('solver', 'theta')],
        snapshots=values[('solver', 'snapshots')],
        levels=values[('solver', 'levels')],
        boundary=values[('solver', 'boundary')],
    )
    return RunConfig(
        command=command,
        mus=values[('run', 'mu')],
        conventions=values[('run', 'convention')],
        quad=quad,
        seed=values[('run', 'seed')],
        out=values[('run', 'out')],
        fmt=values[('run', 'format')],
        jobs=values[('run', 'jobs')],
        solver=solver,
    )
