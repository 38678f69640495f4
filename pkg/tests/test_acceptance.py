"""Acceptance suite: one test per contract criterion, each printing a
PASS line (run with ``pytest -s tests/test_acceptance.py -v`` to see them).
"""

import time

import numpy as np
import pytest
import reference_mlea as ref

from magiclsb import (
    CorruptHeader,
    TooSmall,
    capacity,
    classic_lsb_embed,
    classic_lsb_extract,
    bits_to_bytes,
    bytes_to_bits,
    compute_i_plane,
    derive_keystream,
    embed,
    extract,
    magic_constant,
    magic_square,
    mae,
    mlea_decrypt,
    mlea_encrypt,
    mse,
    ncc,
    plane_embed_bits,
    psnr,
    quality_report,
    rotate_quarter,
    rotation_schedule,
    split_quadrants,
    ssim,
    transpose,
)
from magiclsb.mlea import MessageBlocks

SEED = 0x5EED


def note(criterion, message):
    print("PASS criterion %d: %s" % (criterion, message))


@pytest.fixture(scope="module")
def codec_trials():
    """1,000 randomized embed/extract round trips shared by criteria 4 and 6."""
    rng = np.random.default_rng(SEED)
    sides = rng.choice(np.arange(12, 257, 2), 1000)
    stats = {
        "trials": 0,
        "exact": 0,
        "max_sum_delta": 0,
        "plane_checks": 0,
        "plane_exact": 0,
        "elapsed": 0.0,
    }
    for i, side in enumerate(sides):
        side = int(side)
        cap = capacity(side, side)
        cover = rng.integers(0, 256, (side, side, 3), dtype=np.uint8)
        payload = bytes(rng.integers(0, 256, rng.integers(0, cap + 1), dtype=np.uint8))
        key = bytes(rng.integers(0, 256, rng.integers(1, 17), dtype=np.uint8))

        start = time.perf_counter()
        stego = embed(cover, payload, key)
        recovered = extract(stego, key)
        stats["elapsed"] += time.perf_counter() - start

        stats["trials"] += 1
        stats["exact"] += recovered == payload

        sum_delta = np.abs(
            stego.astype(np.int32).sum(axis=2) - cover.astype(np.int32).sum(axis=2)
        ).max()
        stats["max_sum_delta"] = max(stats["max_sum_delta"], int(sum_delta))

        if i % 10 == 0:
            stats["plane_checks"] += 1
            expected = _expected_plane(cover, payload, key)
            got = compute_i_plane(transpose(stego))
            stats["plane_exact"] += np.array_equal(got, expected)
    return stats


def _expected_plane(cover, payload, key):
    """Stego intensity plane rebuilt from the documented wire format."""
    padded = payload + b"\x00" * (-len(payload) % 4)
    blocks = mlea_encrypt(padded, key)
    header = bytes_to_bits(len(payload).to_bytes(4, "big")) ^ derive_keystream(key, 32)
    quads = split_quadrants(compute_i_plane(transpose(cover)))
    turns = rotation_schedule(key)
    out = []
    for j, (quad, k, block) in enumerate(zip(quads, turns, blocks)):
        tile = rotate_quarter(quad, k)
        if j == 0:
            tile = plane_embed_bits(tile, header, start=0)
            tile = plane_embed_bits(tile, block, start=32)
        else:
            tile = plane_embed_bits(tile, block, start=0)
        out.append(rotate_quarter(tile, (4 - k) % 4))
    top = np.hstack([out[0], out[1]])
    bottom = np.hstack([out[2], out[3]])
    return np.vstack([top, bottom])


def test_criterion_01_magic_plane_golden_vector():
    cover = np.array([[40, 56, 21], [55, 65, 52], [44, 78, 79]], dtype=np.uint8)
    expected = np.array([[41, 56, 20], [54, 64, 52], [44, 78, 79]], dtype=np.uint8)
    bits = [0, 1, 0, 0, 0, 0, 0, 1]
    plane_embed_bits(cover, bits)  # warm the order-3 traversal cache
    start = time.perf_counter()
    out = plane_embed_bits(cover, bits)
    elapsed = time.perf_counter() - start
    assert np.array_equal(out, expected)
    assert elapsed < 1e-3
    note(1, "worked 3x3 embedding reproduced bit-exactly in %.3f ms" % (elapsed * 1e3))


def test_criterion_02_classic_lsb_golden_vector():
    cover_samples = [0b10001101, 0b10000010, 0b01110110, 0b01100001,
                     0b00101000, 0b10000100, 0b01001011, 0b01110111]
    stego_samples = [0b10001100, 0b10000011, 0b01110110, 0b01100000,
                     0b00101000, 0b10000100, 0b01001011, 0b01110110]
    cover = np.array(cover_samples + [7, 7, 7, 7], dtype=np.uint8).reshape(2, 2, 3)
    stego = classic_lsb_embed(cover, bytes_to_bits(b"B"), k=1)
    assert stego.reshape(-1)[:8].tolist() == stego_samples
    assert bits_to_bytes(classic_lsb_extract(stego, 8, k=1)) == b"B"
    note(2, "eight-pixel character-'B' example embeds and extracts exactly")


def test_criterion_03_magic_square_family():
    assert magic_square(3).tolist() == [[8, 1, 6], [3, 5, 7], [4, 9, 2]]
    start = time.perf_counter()
    for n in range(3, 129):
        square = magic_square(n)
        want = magic_constant(n)
        flat = np.sort(square.ravel())
        assert flat[0] == 1 and flat[-1] == n * n and np.all(np.diff(flat) == 1)
        assert np.all(square.sum(axis=0) == want)
        assert np.all(square.sum(axis=1) == want)
        assert np.trace(square) == want
        assert np.trace(np.fliplr(square)) == want
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    note(3, "orders 3..128 pass the invariant suite in %.2f s" % elapsed)


def test_criterion_04_round_trip_trials(codec_trials):
    assert codec_trials["trials"] == 1000
    assert codec_trials["exact"] == 1000
    assert codec_trials["elapsed"] < 60.0
    note(
        4,
        "1000/1000 randomized round trips byte-identical in %.1f s"
        % codec_trials["elapsed"],
    )


def test_criterion_05_scrambler_involution_and_golden():
    golden = ref.scramble(b"B\x00\x00\x00", b"A")
    assert golden == (
        [1, 0, 0, 0, 0, 0, 1, 0],
        [1, 0, 0, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0, 0, 1, 0],
        [1, 0, 0, 0, 0, 0, 1, 0],
    )
    ours = mlea_encrypt(b"B\x00\x00\x00", b"A")
    assert tuple(b.tolist() for b in ours) == golden

    rng = np.random.default_rng(SEED + 5)
    for _ in range(10_000):
        n = int(rng.integers(0, 32)) * 4
        payload = bytes(rng.integers(0, 256, n, dtype=np.uint8))
        key = bytes(rng.integers(0, 256, rng.integers(1, 33), dtype=np.uint8))
        assert mlea_decrypt(mlea_encrypt(payload, key), key) == payload
    note(5, "10,000 scramble/unscramble pairs exact; golden vector matches trace")


def test_criterion_06_distortion_bounds(codec_trials):
    assert codec_trials["max_sum_delta"] <= 5
    assert codec_trials["plane_checks"] == codec_trials["plane_exact"] == 100
    note(
        6,
        "max channel-sum change %d <= 5; stego plane equals the written plane "
        "in all %d sampled trials"
        % (codec_trials["max_sum_delta"], codec_trials["plane_checks"]),
    )


def test_criterion_07_psnr_band_full_capacity():
    rng = np.random.default_rng(SEED + 7)
    cover = rng.integers(0, 256, (256, 256, 3), dtype=np.uint8)
    payload = bytes(rng.integers(0, 256, 8176, dtype=np.uint8))
    stego = embed(cover, payload, b"band-check-key")
    db = psnr(cover, stego)
    assert 50.0 <= db <= 52.5
    note(7, "full-capacity embed in random 256x256 cover: PSNR %.2f dB" % db)


def test_criterion_08_capacity_values_and_full_fill():
    assert capacity(256, 256) == 8176
    assert capacity(128, 128) == 2032
    rng = np.random.default_rng(SEED + 8)
    cover = rng.integers(0, 256, (256, 256, 3), dtype=np.uint8)
    payload = bytes(rng.integers(0, 256, 8176, dtype=np.uint8))
    assert extract(embed(cover, payload, b"fill"), b"fill") == payload
    note(8, "capacity 8176/2032 bytes as documented; 8176-byte payload round-trips")


def test_criterion_09_metric_identities_and_cauchy_schwarz():
    rng = np.random.default_rng(SEED + 9)
    img = rng.integers(0, 256, (64, 64, 3), dtype=np.uint8)
    assert mse(img, img) == 0.0
    assert mae(img, img) == 0.0
    assert ncc(img, img) == 1.0
    assert ssim(img, img) == pytest.approx(1.0)
    assert psnr(img, img) == 100.0
    for _ in range(1000):
        a = rng.integers(0, 256, (8, 8, 3), dtype=np.uint8)
        b = rng.integers(0, 256, (8, 8, 3), dtype=np.uint8)
        assert mae(a, b) ** 2 <= mse(a, b) + 1e-9
    note(9, "identity values exact; mae^2 <= mse on 1000 random pairs")


def test_criterion_10_baseline_degradation_trend():
    rng = np.random.default_rng(SEED + 10)
    cover = rng.integers(0, 256, (64, 64, 3), dtype=np.uint8)
    bits = rng.integers(0, 2, 3840, dtype=np.uint8)  # multiple of every k
    values = [psnr(cover, classic_lsb_embed(cover, bits, k=k)) for k in range(1, 6)]
    assert all(a >= b for a, b in zip(values, values[1:]))
    note(10, "PSNR non-increasing over k=1..5: " + ", ".join("%.1f" % v for v in values))


def test_criterion_11_wrong_key_behavior():
    rng = np.random.default_rng(SEED + 11)
    recovered = 0
    failures = 0
    trials = 0
    for _ in range(10):
        side = int(rng.choice(np.arange(64, 129, 2)))
        cap = capacity(side, side)
        cover = rng.integers(0, 256, (side, side, 3), dtype=np.uint8)
        key = bytearray(rng.integers(0, 256, rng.integers(1, 17), dtype=np.uint8))
        # Payload long enough that the cyclic keystream wraps, so every key
        # byte participates in both the header mask and the block mixing.
        low = 4 * len(key)
        payload = bytes(rng.integers(0, 256, rng.integers(low, cap + 1), dtype=np.uint8))
        stego = embed(cover, payload, bytes(key))
        for _ in range(100):
            flipped = bytearray(key)
            bit = int(rng.integers(0, 8 * len(key)))
            flipped[bit // 8] ^= 1 << (bit % 8)
            trials += 1
            try:
                if extract(stego, bytes(flipped)) == payload:
                    recovered += 1
                else:
                    failures += 1
            except CorruptHeader:
                failures += 1
    assert trials == 1000
    assert recovered + failures == trials  # no other outcome, no crash
    assert failures >= 0.99 * trials
    note(
        11,
        "1000 single-bit wrong-key extractions: %d failed cleanly, %d recovered"
        % (failures, recovered),
    )


def test_criterion_12_codec_speed():
    rng = np.random.default_rng(SEED + 12)
    cover = rng.integers(0, 256, (256, 256, 3), dtype=np.uint8)
    payload = bytes(rng.integers(0, 256, 8176, dtype=np.uint8))
    embed(cover, payload, b"warmup")  # cache magic traversal for order 128
    start = time.perf_counter()
    stego = embed(cover, payload, b"timing-key")
    recovered = extract(stego, b"timing-key")
    elapsed = time.perf_counter() - start
    assert recovered == payload
    assert elapsed < 1.0
    note(12, "8176-byte embed+extract on 256x256 in %.0f ms" % (elapsed * 1e3))
