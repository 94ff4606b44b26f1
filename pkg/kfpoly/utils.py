# -*- coding: utf-8 -*-
# *************************************
# kfpoly: Kostka-Foulkes polynomials and q-multiplicities
#
# Copyright (c) 2026 kfpoly Developers
#
# *************************************

import sys
from collections import OrderedDict


def progress_bar(iterable, show_progress=True, progress_type="tqdm", total=None):
    """
    Wrap an iterable in a progress bar (or not).
    """
    try:
        import tqdm
    except ImportError:
        tqdm = None

    if progress_type is None or tqdm is None or show_progress is False:
        return iterable
    elif progress_type == "tqdm":
        return tqdm.tqdm(iterable, total=total, file=sys.stderr)
    else:
        return iterable


def print_status(message, quiet=False):
    if not quiet:
        print(message, file=sys.stderr)


def format_time(time):
    hours = time // 3600
    minutes = (time % 3600) // 60
    seconds = (time % 3600) % 60
    return "%02d:%02d:%04.1f" % (hours, minutes, seconds)


def parse_vector(text):
    """
    Parse a comma-separated integer vector such as "3,1,0" or "0,-1,-2".

    The empty string is the empty vector.
    """
    text = text.strip()
    if text == "":
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError("invalid integer vector: %r" % text)


def format_vector(vector):
    return ",".join(str(v) for v in vector)


def is_decreasing(vector):
    return all(vector[i] >= vector[i + 1] for i in range(len(vector) - 1))


def check_decreasing(vector, name="vector"):
    if not is_decreasing(vector):
        raise ValueError("%s must be weakly decreasing: %r" % (name, tuple(vector)))


def check_same_length(a, b):
    if len(a) != len(b):
        raise ValueError("length mismatch: %r and %r" % (tuple(a), tuple(b)))


def pad(vector, n):
    """
    Pad a vector with trailing zeros to length n.
    """
    vector = tuple(vector)
    if len(vector) > n:
        raise ValueError("%r has more than %d parts" % (vector, n))
    return vector + (0,) * (n - len(vector))


def iter_partitions(size, max_parts, max_part=None):
    """
    Yield the partitions of size with at most max_parts parts, each padded
    to length max_parts, in reverse lexicographic order.

    Args:
        * size: (int) sum of the parts
        * max_parts: (int) padded length
        * max_part: (int) optional bound on the first part
    """
    if max_part is None:
        max_part = size

    def _fill(remaining, slots, bound):
        if remaining == 0:
            yield (0,) * slots
            return
        if slots == 0:
            return
        for first in range(min(remaining, bound), 0, -1):
            if first * slots < remaining:
                break
            for rest in _fill(remaining - first, slots - 1, first):
                yield (first,) + rest

    if size < 0 or max_parts < 0:
        return
    for partition in _fill(size, max_parts, max_part):
        yield partition


def iter_compositions(total, n):
    """
    Yield every vector of n nonnegative integers summing to total.
    """
    if n == 0:
        if total == 0:
            yield ()
        return
    if n == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in iter_compositions(total - first, n - 1):
            yield (first,) + rest


def json_dump(obj, fp, sort_keys=True, indent=4):
    dumps(fp, obj, sort_keys=sort_keys, indent=indent)
    fp.write("\n")


def dumps(fp, obj, level=0, sort_keys=True, indent=4, newline="\n", space=" "):
    if isinstance(obj, dict):
        if sort_keys:
            obj = OrderedDict((key, obj[key]) for key in sorted(obj.keys(), key=_key_order))
        if len(obj) == 0:
            fp.write("{}")
            return
        fp.write("{" + newline)
        comma = ""
        for key, value in obj.items():
            fp.write(comma)
            comma = "," + newline
            fp.write(space * indent * (level + 1))
            fp.write('"%s":%s' % (key, space))
            dumps(fp, value, level + 1, sort_keys, indent, newline, space)
        fp.write(newline + (space * indent * level) + "}")
    elif isinstance(obj, str):
        fp.write('"%s"' % obj.replace("\\", "\\\\").replace('"', '\\"'))
    elif isinstance(obj, (list, tuple)):
        if len(obj) == 0:
            fp.write("[]")
        elif all(isinstance(item, (int, str)) for item in obj):
            fp.write("[")
            comma = ""
            for item in obj:
                fp.write(comma)
                comma = ", "
                dumps(fp, item, level + 1, sort_keys, indent, newline, space)
            fp.write("]")
        else:
            fp.write("[" + newline)
            comma = ""
            for item in obj:
                fp.write(comma)
                comma = "," + newline
                fp.write(space * indent * (level + 1))
                dumps(fp, item, level + 1, sort_keys, indent, newline, space)
            fp.write(newline + (space * indent * level) + "]")
    elif isinstance(obj, bool):
        fp.write("true" if obj else "false")
    elif isinstance(obj, int):
        fp.write(str(obj))
    elif obj is None:
        fp.write("null")
    elif isinstance(obj, float):
        fp.write("%.7g" % obj)
    else:
        raise TypeError("Unknown object %r for json serialization" % obj)


def _key_order(key):
    # integer-like keys (polynomial exponents) sort numerically
    try:
        return (0, int(key), "")
    except (TypeError, ValueError):
        return (1, 0, str(key))
