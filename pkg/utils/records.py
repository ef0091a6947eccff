"""
Record output: one JSON document per line for `--format records`
"""
import math
from typing import Any, Dict, Iterable, Optional

from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

INFINITE_TOKEN = 'INF'


class DistanceField(serializers.Field):
    """Distance or eccentricity; INFINITE is rendered as "INF" """

    def to_representation(self, value):
        if isinstance(value, float) and math.isinf(value):
            return INFINITE_TOKEN
        return int(value)

    def to_internal_value(self, data):
        if data == INFINITE_TOKEN:
            return math.inf
        try:
            value = int(data)
        except (TypeError, ValueError):
            raise serializers.ValidationError(f"Expected a non-negative integer or {INFINITE_TOKEN}, got {data!r}")
        if value < 0:
            raise serializers.ValidationError(f"Distance must be non-negative, got {value}")
        return value


class VertexSetField(serializers.Field):
    """Vertex set as a sorted list of ids"""

    def to_representation(self, value):
        return sorted(value)


def set_argument(members: Optional[Iterable[int]]) -> Optional[str]:
    """The `--set a,b,c` spelling of a vertex set"""
    if members is None:
        return None
    return ','.join(str(v) for v in sorted(members))


def render_record(record_type: str, data: Dict[str, Any]) -> str:
    return JSONRenderer().render({'record': record_type, **data}).decode('utf-8')


def render_records(records: Iterable[tuple]) -> str:
    """Render (record_type, data) pairs, one JSON object per line"""
    return ''.join(render_record(record_type, data) + '\n' for record_type, data in records)
