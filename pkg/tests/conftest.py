import pytest

from torsorkit.exactla import GF, QQ
from torsorkit.examples import (
    corrupted_c3_torsor,
    corrupted_sweedler_torsor,
    cyclic_group,
    ground_torsor,
    group_torsor,
    sqrt2_torsor,
    sweedler_self_torsor,
    symmetric_group3,
)


def positive_torsors():
    return [
        ground_torsor(),
        group_torsor(cyclic_group(2), QQ, "c2_group_torsor"),
        group_torsor(cyclic_group(3), QQ, "c3_group_torsor"),
        group_torsor(symmetric_group3(), QQ, "s3_group_torsor"),
        sqrt2_torsor(),
        sweedler_self_torsor(QQ),
        sweedler_self_torsor(GF(5)),
    ]


def negative_torsors():
    return [corrupted_c3_torsor(), corrupted_sweedler_torsor()]


POSITIVE = {t.name: t for t in positive_torsors()}


@pytest.fixture(params=sorted(POSITIVE))
def positive(request):
    return POSITIVE[request.param]


@pytest.fixture(params=["corrupted_c3_torsor", "corrupted_sweedler_torsor"])
def negative(request):
    return {t.name: t for t in negative_torsors()}[request.param]
