import json
import logging
from typing import Any, Dict, Optional

from core.errors import ConfigError
from models.run import Command, GridSpec, ModelKind, MonteCarloSpec, RunConfig, Spacing, TimeSpec
from repositories.base_repository import BaseRepository

logger = logging.getLogger(__name__)

# Per-model parameter blocks: key -> (kind, default)
PARAM_SCHEMAS: Dict[str, Dict[str, tuple]] = {
    ModelKind.PAIR_RAW.value: {
        'd1': ('vec3', [0.0, 0.0, 1.0]),
        'd2': ('vec3', [0.0, 0.0, 1.0]),
        'direction': ('vec3', [1.0, 0.0, 0.0]),
        'kvec': ('vec3', [1.0, 0.0, 0.0]),
    },
    ModelKind.PAIR_AVERAGED.value: {
        'dmag': ('float', 1.0),
        'direction': ('vec3', [0.0, 0.0, 1.0]),
        'kvec': ('vec3', [0.0, 0.0, 1.0]),
    },
    ModelKind.DRIVEN.value: {
        'mu': ('float', 1.0),
        'I0': ('float', 1.0),
        'beta_pop': ('float', 1.0),
        'gamma1': ('float', 1.0),
        'gamma2': ('float', 1.0),
        'delta1': ('float', 0.0),
        'delta2': ('float', 0.0),
        'direction': ('vec3', [0.0, 0.0, 1.0]),
        'kvec': ('vec3', [0.0, 0.0, 1.0]),
    },
    ModelKind.BLOCH2.value: {
        'mu': ('float', 1.0),
        'E0': ('float', 1.0),
        'gamma': ('float', 1.0),
        'omega_a': ('float', 0.0),
        'omega0': ('float', 0.0),
        'hbar': ('float', 1.0),
        'initial': ('spinor', [1.0, 0.0]),
    },
    ModelKind.DIRAC4.value: {
        'p': ('vec3', [0.0, 0.0, 0.0]),
        'omega': ('float', 1.0),
        'mu': ('float', 0.0),
        'Efield': ('vec3', [0.0, 0.0, 0.0]),
        'c': ('float', 1.0),
        'hbar': ('float', 1.0),
        'initial': ('spinor', [1.0, 0.0, 0.0, 0.0]),
    },
    Command.AUDIT.value: {
        'dmag': ('float', 1.0),
        'r': ('float', 1.0),
        'k': ('float', 1.0),
        'mc_sigmas': ('float', 4.0),
        'driven_points': ('int', 1000),
        'driven_seed': ('int', 7),
    },
    Command.REGIME.value: {
        'mu': ('float', 1.0),
        'E0': ('float', 0.5),
        'gamma': ('float', 1.0),
        'hbar': ('float', 1.0),
        'intensity': ('float', 1.0),
        'k_medium': ('float', 1.0),
        'wavelength': ('float', 1.0),
        'r': ('float', 1.0),
        'unit_in_cm': ('optional_float', None),
    },
}

TOP_LEVEL_KEYS = {'command', 'model', 'params', 'grid', 'time', 'mc', 'output'}
BLOCK_KEYS = {
    'grid': {'r_min', 'r_max', 'n_points', 'spacing'},
    'time': {'duration', 'dt'},
    'mc': {'n_samples', 'seed', 'correlated'},
}
# params that must be > 0 or >= 0 wherever they appear
POSITIVE_PARAMS = {'gamma', 'gamma1', 'gamma2', 'c', 'hbar', 'wavelength', 'unit_in_cm'}
NON_NEGATIVE_PARAMS = {'E0', 'intensity'}
# amplitudes expected in params.initial
SPINOR_LENGTHS = {ModelKind.BLOCH2: 2, ModelKind.DIRAC4: 4}

# command-line flag (snake_case) -> config block holding the same-named key
OVERRIDE_BLOCKS = {
    'r_min': 'grid',
    'r_max': 'grid',
    'n_points': 'grid',
    'seed': 'mc',
    'n_samples': 'mc',
    'dt': 'time',
    'duration': 'time',
    'output': None,
}


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _coerce(kind: str, value: Any, key_path: str) -> Any:
    if kind == 'float':
        if not _is_number(value):
            raise ConfigError(f"expected a number, got {value!r}", key_path)
        return float(value)
    if kind == 'optional_float':
        return None if value is None else _coerce('float', value, key_path)
    if kind == 'int':
        if isinstance(value, bool) or not (isinstance(value, int) or (isinstance(value, float) and value.is_integer())):
            raise ConfigError(f"expected an integer, got {value!r}", key_path)
        return int(value)
    if kind == 'bool':
        if not isinstance(value, bool):
            raise ConfigError(f"expected true/false, got {value!r}", key_path)
        return value
    if kind == 'vec3':
        if not isinstance(value, list) or len(value) != 3 or not all(_is_number(v) for v in value):
            raise ConfigError(f"expected a list of 3 numbers, got {value!r}", key_path)
        return [float(v) for v in value]
    if kind == 'spinor':
        if not isinstance(value, list) or not value:
            raise ConfigError("expected a list of amplitudes", key_path)
        amplitudes = []
        for i, item in enumerate(value):
            if _is_number(item):
                amplitudes.append([float(item), 0.0])
            elif isinstance(item, list) and len(item) == 2 and all(_is_number(v) for v in item):
                amplitudes.append([float(item[0]), float(item[1])])
            else:
                raise ConfigError("amplitude must be a number or a [re, im] pair", f"{key_path}[{i}]")
        return amplitudes
    raise ConfigError(f"unsupported kind {kind}", key_path)


def _reject_unknown(data: Dict[str, Any], allowed, prefix: str = ""):
    for key in data:
        if key not in allowed:
            raise ConfigError("unknown key", f"{prefix}{key}")


class ConfigRepository(BaseRepository[RunConfig]):
    """Loads run configuration documents and validates them strictly"""

    def get_collection_name(self) -> str:
        return "configs"

    def from_dict(self, data: Dict[str, Any]) -> RunConfig:
        if not isinstance(data, dict):
            raise ConfigError("top-level document must be a JSON object")
        _reject_unknown(data, TOP_LEVEL_KEYS)

        try:
            command = Command(data.get('command'))
        except ValueError:
            raise ConfigError(
                f"expected one of {[c.value for c in Command]}, got {data.get('command')!r}", "command"
            ) from None

        model = None
        if data.get('model') is not None:
            try:
                model = ModelKind(data['model'])
            except ValueError:
                raise ConfigError(
                    f"expected one of {[m.value for m in ModelKind]}, got {data['model']!r}", "model"
                ) from None

        if command == Command.SWEEP and (model is None or not model.is_potential):
            raise ConfigError("sweep needs one of pair_raw, pair_averaged, driven", "model")
        if command == Command.DYNAMICS and (model is None or not model.is_dynamics):
            raise ConfigError("dynamics needs one of bloch2, dirac4", "model")

        schema_name = command.value if command in (Command.AUDIT, Command.REGIME) else model.value
        params = self._params_from_dict(data.get('params', {}), PARAM_SCHEMAS[schema_name])

        grid = self._grid_from_dict(data.get('grid', {}))
        time = self._time_from_dict(data.get('time', {}))
        mc = self._mc_from_dict(data.get('mc', {}))

        output = data.get('output')
        if output is not None and not isinstance(output, str):
            raise ConfigError("expected a path string", "output")

        config = RunConfig(command=command, model=model, params=params, grid=grid, time=time, mc=mc, output=output)
        self.validate(config)
        return config

    def validate(self, config: RunConfig):
        self._validate_params(config)
        if config.command == Command.SWEEP:
            config.grid.validate()
        if config.command == Command.DYNAMICS:
            config.time.validate()
        if config.command == Command.AUDIT:
            config.mc.validate()
            if config.params['r'] <= 0:
                raise ConfigError("must be positive", "params.r")
            if config.params['driven_points'] < 1:
                raise ConfigError("must be at least 1", "params.driven_points")

    def _validate_params(self, config: RunConfig):
        params = config.params
        for key, value in params.items():
            if value is None:
                continue
            if key in POSITIVE_PARAMS and value <= 0:
                raise ConfigError(f"must be positive, got {value}", f"params.{key}")
            if key in NON_NEGATIVE_PARAMS and value < 0:
                raise ConfigError(f"must be non-negative, got {value}", f"params.{key}")

        if config.command == Command.REGIME and params['r'] < 0:
            raise ConfigError(f"must be non-negative, got {params['r']}", "params.r")
        if 'direction' in params and not any(params['direction']):
            raise ConfigError("must be a non-zero vector", "params.direction")

        if config.model in SPINOR_LENGTHS:
            initial = params['initial']
            expected = SPINOR_LENGTHS[config.model]
            if len(initial) != expected:
                raise ConfigError(
                    f"{config.model.value} needs {expected} amplitudes, got {len(initial)}", "params.initial"
                )
            if not any(re or im for re, im in initial):
                raise ConfigError("state vector has zero norm", "params.initial")

    def _block(self, value: Any, name: str) -> Dict[str, Any]:
        if not isinstance(value, dict):
            raise ConfigError("expected an object", name)
        _reject_unknown(value, BLOCK_KEYS[name], prefix=f"{name}.")
        return value

    def _params_from_dict(self, raw: Any, schema: Dict[str, tuple]) -> Dict[str, Any]:
        if not isinstance(raw, dict):
            raise ConfigError("expected an object", "params")
        _reject_unknown(raw, schema, prefix="params.")
        params = {}
        for key, (kind, default) in schema.items():
            value = raw.get(key, default)
            params[key] = _coerce(kind, value, f"params.{key}")
        return params

    def _grid_from_dict(self, raw: Any) -> GridSpec:
        block = self._block(raw, 'grid')
        defaults = GridSpec()
        spacing_raw = block.get('spacing', defaults.spacing.value)
        try:
            spacing = Spacing(spacing_raw)
        except ValueError:
            raise ConfigError(f"expected linear or log, got {spacing_raw!r}", "grid.spacing") from None
        return GridSpec(
            r_min=_coerce('float', block.get('r_min', defaults.r_min), 'grid.r_min'),
            r_max=_coerce('float', block.get('r_max', defaults.r_max), 'grid.r_max'),
            n_points=_coerce('int', block.get('n_points', defaults.n_points), 'grid.n_points'),
            spacing=spacing,
        )

    def _time_from_dict(self, raw: Any) -> TimeSpec:
        block = self._block(raw, 'time')
        defaults = TimeSpec()
        return TimeSpec(
            duration=_coerce('float', block.get('duration', defaults.duration), 'time.duration'),
            dt=_coerce('float', block.get('dt', defaults.dt), 'time.dt'),
        )

    def _mc_from_dict(self, raw: Any) -> MonteCarloSpec:
        block = self._block(raw, 'mc')
        defaults = MonteCarloSpec()
        return MonteCarloSpec(
            n_samples=_coerce('int', block.get('n_samples', defaults.n_samples), 'mc.n_samples'),
            seed=_coerce('int', block.get('seed', defaults.seed), 'mc.seed'),
            correlated=_coerce('bool', block.get('correlated', defaults.correlated), 'mc.correlated'),
        )

    def parse(
        self,
        text: str,
        overrides: Optional[Dict[str, Any]] = None,
        command: Optional[str] = None,
    ) -> RunConfig:
        """Parse a JSON document; overrides replace same-named keys before validation.

        ``command`` is the command requested on the command line: it fills a
        missing ``command`` key and must match one that is present.
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"malformed JSON: {exc}") from None
        if not isinstance(data, dict):
            raise ConfigError("top-level document must be a JSON object")
        if command is not None:
            declared = data.setdefault('command', command)
            if declared != command:
                raise ConfigError(f"config declares {declared!r} but {command!r} was requested", "command")
        for key, value in (overrides or {}).items():
            if value is None:
                continue
            if key not in OVERRIDE_BLOCKS:
                raise ConfigError("unknown override", key)
            block = OVERRIDE_BLOCKS[key]
            if block is None:
                data[key] = value
            else:
                section = data.setdefault(block, {})
                if not isinstance(section, dict):
                    raise ConfigError("expected an object", block)
                section[key] = value
                logger.debug("Override %s.%s = %r", block, key, value)
        return self.from_dict(data)

    def load(
        self,
        path: str,
        overrides: Optional[Dict[str, Any]] = None,
        command: Optional[str] = None,
    ) -> RunConfig:
        try:
            text = self._load_data(path)
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}", path) from None
        return self.parse(text, overrides, command)
