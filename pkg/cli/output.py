#!/usr/bin/env python3

"""
A module for the output files.

states.json holds one record per state with complex numbers as {"re", "im"}
pairs; the tables are comma-separated. Floats are written with 17 significant
digits everywhere. Field order is fixed so that identical runs give identical
files.
"""

# stdlib modules
import os
import re
import csv
import json
import math
import logging

# third party modules
import numpy as np

# inner modules
from solver.states import StateResult
from solver import const as sconst
from cli import const
from cli.config import RunConfig, renderConfig

# typing
from typing import Dict, Iterable, List, Sequence

# stands in for a float while the document is encoded; json escapes it as \u0000
FLOAT_TOKEN = '\x00'
FLOAT_TOKEN_PATTERN = re.compile(r'"\\u0000(\d+)"')

def complexRecord (value: complex) -> Dict[str, float]:
    value = complex(value)
    return {'re': value.real, 'im': value.imag}

def stateRecord (state: StateResult, index: int, path: str) -> Dict[str, object]:
    """
    Returns the record of one state.

    :param state: solved state
    :param index: position in the output
    :param path: fv0 or schrodinger
    """
    return {
        'index': index,
        'path': path,
        'kind': state.kind,
        'e_total': complexRecord(state.e_total),
        'e_bind': complexRecord(state.e_bind),
        'width': state.width,
        'particle_sign': 'undetermined' if state.particle_sign is None else state.particle_sign,
        'residual': state.residual,
        'converged': bool(state.converged),
        'degenerate': bool(state.degenerate),
        'diagnostics': {
            'depth_used': state.depth_used,
            'iterations': state.iterations,
            'depth_shift': state.depth_shift,
            'scale': state.scale,
            'cf_change': state.cf_change,
        },
    }

def shiftPairs (schrodinger: Sequence[StateResult], fv0: Sequence[StateResult]) -> List[Dict[str, object]]:
    """
    Pairs the i-th Schroedinger state with the i-th Feshbach-Villars state of the
    same kind (particle states only on the Feshbach-Villars side).

    :param schrodinger: Schroedinger states sorted by energy
    :param fv0: Feshbach-Villars states sorted by energy
    """

    pairs = []
    for kind in (sconst.KIND_BOUND, sconst.KIND_RESONANCE):
        left = [(i, s) for i, s in enumerate(schrodinger) if s.kind == kind]
        right = [(i, s) for i, s in enumerate(fv0) if s.kind == kind and s.particle_sign != -1]
        for (i, sch), (j, rel) in zip(left, right):
            pairs.append({
                'kind': kind,
                'schrodinger_index': i,
                'fv0_index': j,
                'schrodinger': complexRecord(sch.e_bind),
                'fv0': complexRecord(rel.e_bind),
                'shift': complexRecord(rel.e_bind - sch.e_bind),
            })
    return pairs

def _number (value: float) -> str:
    value = float(value)
    if math.isnan(value):
        return 'NaN'
    if math.isinf(value):
        return 'Infinity' if value > 0 else '-Infinity'
    text = const.FLOAT_FORMAT % value
    # keep integral values floats when read back
    return text if any(c in text for c in '.en') else text + '.0'

def encodeDocument (document: object) -> str:
    """
    Returns the indented JSON text of a document with every float written with
    17 significant digits, as in the tables.

    :param document: dicts, lists, strings, ints, bools and floats
    """

    floats = []

    def tokenize (value: object) -> object:
        if isinstance(value, dict):
            return {key: tokenize(item) for key, item in value.items()}
        if isinstance(value, (list, tuple)):
            return [tokenize(item) for item in value]
        if isinstance(value, (float, np.floating)):
            floats.append(float(value))
            return f'{FLOAT_TOKEN}{len(floats) - 1}'
        return value

    text = json.dumps(tokenize(document), indent=2)
    return FLOAT_TOKEN_PATTERN.sub(lambda match: _number(floats[int(match.group(1))]), text)

def writeStates (directory: str, config: RunConfig, results: Dict[str, List[StateResult]],
                 failures: Iterable[str] = ()) -> str:
    """
    Writes states.json and returns its path.

    :param directory: output directory
    :param config: configuration of the run (embedded as canonical text)
    :param results: states per solver path
    :param failures: messages of requested quantities that failed
    """

    failures = list(failures)
    states = []
    for path in config.solver.paths:
        for state in results.get(path, []):
            states.append(stateRecord(state, len(states), path))

    document = {
        'format_version': const.FORMAT_VERSION,
        'config': renderConfig(config),
        'states': states,
        'converged': all(s['converged'] for s in states) and not failures,
        'failures': failures,
    }
    if const.PATH_SCHRODINGER in results and const.PATH_FV0 in results:
        document['pairs'] = shiftPairs(results[const.PATH_SCHRODINGER], results[const.PATH_FV0])

    target = os.path.join(directory, const.STATES_FILE)
    with open(target, 'w', encoding='utf-8') as file:
        file.write(encodeDocument(document))
        file.write('\n')
    logging.info(f'Wrote {len(states)} states to {target}.')
    return target

def _format (value: object) -> str:
    if isinstance(value, (float, np.floating)):
        return const.FLOAT_FORMAT % value
    return str(value)

def writeTable (directory: str, name: str, header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    """
    Writes a comma-separated table and returns its path.

    :param directory: output directory
    :param name: file name
    :param header: column names
    :param rows: rows of values, floats written with 17 significant digits
    """

    target = os.path.join(directory, name)
    count = 0
    with open(target, 'w', encoding='utf-8', newline='') as file:
        writer = csv.writer(file, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([_format(value) for value in row])
            count += 1
    logging.info(f'Wrote {count} rows to {target}.')
    return target
