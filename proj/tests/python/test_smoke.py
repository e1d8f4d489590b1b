import itertools

import pytest

import gmsr

SHARES = [
    [1, 0, 8], [10, 8, 2], [9, 4, 7], [1, 10, 1], [0, 4, 6],
    [9, 8, 0], [9, 0, 5], [3, 2, 10], [5, 3, 4], [7, 3, 9],
]


@pytest.fixture
def params():
    return gmsr.derive_params(10, 2, 4, 11)


def test_params(params):
    assert (params.alpha, params.B, params.type) == (3, 6, "III")
    assert params.points == list(range(1, 11))
    assert gmsr.feasibility_bound(11, 3) == 10


def test_encode_and_reconstruct(params):
    shares = gmsr.encode(params, [1, 2, 3, 4, 5, 6])
    assert [s.data for s in shares] == SHARES
    for a, b in itertools.combinations(range(10), 2):
        assert gmsr.reconstruct(params, [shares[a], shares[b]]) == [1, 2, 3, 4, 5, 6]


def test_repair(params):
    shares = gmsr.encode(params, [1, 2, 3, 4, 5, 6])
    phi = gmsr.repair_vector(params, 1)
    assert phi == [1, 1, 1]
    packets = [gmsr.helper_compute(params, shares[h - 1], phi) for h in (2, 3, 4, 5)]
    assert [p.value for p in packets] == [9, 9, 1, 10]
    assert gmsr.regenerate(params, 1, packets).data == [1, 0, 8]


def test_message_matrix(params):
    rows = gmsr.build_message_matrix(params, [1, 2, 3, 4, 5, 6])
    assert rows == [[1, 2, 3], [2, 4, 5], [3, 5, 0], [6, 0, 0]]
    assert gmsr.extract_symbols(params, rows) == [1, 2, 3, 4, 5, 6]
    assert gmsr.free_positions(params)[-1][:2] == (3, 0)


def test_secure(params):
    layout = gmsr.secure_layout(params, 1, 0)
    assert layout.R == 3 and layout.capacity == 3
    assert [p[:2] for p in layout.message_positions] == [(1, 1), (1, 2), (3, 0)]
    assert gmsr.secure_build(layout, [7, 8, 9], [4, 5, 6]) == [[7, 8, 9], [8, 4, 5], [9, 5, 0], [6, 0, 0]]
    small = gmsr.derive_params(3, 2, 2, 5)
    assert gmsr.leakage_check(small, 1, 0)["independent"]
    assert not gmsr.leakage_check(small, 1, 0, pin_random=True)["independent"]


def test_embed(params):
    rows = gmsr.embed_via_secure(params, [1, 2, 3, 4, 5, 6])
    assert rows[:4] == gmsr.build_message_matrix(params, [1, 2, 3, 4, 5, 6])
    assert rows[4:] == [[0, 0, 0], [0, 0, 0]]


def test_errors(params):
    with pytest.raises(gmsr.ParamError):
        gmsr.derive_params(3, 2, 4, 11)
    with pytest.raises(ValueError):
        gmsr.derive_params(10, 2, 4, 13)
    shares = gmsr.encode(params, [1, 2, 3, 4, 5, 6])
    with pytest.raises(gmsr.DataError):
        gmsr.reconstruct(params, [shares[0], shares[0]])
