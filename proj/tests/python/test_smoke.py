import math

import pytest

import stegrle

TABLE1 = bytes([71, 82, 73, 32, 112, 105, 100, 58, 48, 48, 55])


def test_text_conversion():
    assert stegrle.text_to_bytes("GRI pid:007") == TABLE1
    assert stegrle.bytes_to_text(TABLE1) == "GRI pid:007"
    with pytest.raises(stegrle.StegrleError, match="NonLatinCharacter"):
        stegrle.text_to_bytes("€")


def test_embed_extract_round_trip():
    carrier = stegrle.synthetic_carrier(256, 256)
    assert stegrle.validate_carrier(carrier) == []
    roi = stegrle.Rect(0, 0, 63, 63)
    stego, report = stegrle.embed(carrier, roi, TABLE1)
    assert report.bytes_hidden == 11
    assert report.sites[0] == (1, 1)
    assert abs(stegrle.mse(carrier, stego) - 0.9565) <= 1e-4
    assert abs(stegrle.psnr(carrier, stego) - 48.3240) <= 1e-3

    message, restored = stegrle.extract(stego)
    assert message == TABLE1
    assert restored == carrier
    assert stegrle.psnr(carrier, restored) == math.inf


def test_capacity_error():
    with pytest.raises(stegrle.StegrleError, match="CapacityExceeded"):
        img = stegrle.GrayImage(3, 3)
        stegrle.embed(img, stegrle.Rect.full(img), b"AB")


def test_rle_and_container():
    row = stegrle.GrayImage(10, 1, bytes([109, 109, 99, 99, 99, 99, 99, 97, 97, 97]))
    stream = stegrle.rle_encode(row)
    assert stream.elements == [109, 99, 97]
    assert stream.lengths == [2, 5, 3]
    blob = stegrle.serialize(stream)
    assert len(blob) == 32
    assert stegrle.rle_decode(stegrle.deserialize(blob)) == row

    zero = stegrle.serialize(stegrle.rle_encode(stegrle.GrayImage(256, 256)))
    assert zero.hex() == "53524c450100010000000100000100000000000001" + "00"
    with pytest.raises(stegrle.StegrleError, match="BadMagic"):
        stegrle.deserialize(b"XRLE" + zero[4:])
    with pytest.raises(stegrle.StegrleError, match="TrailingGarbage"):
        stegrle.deserialize(zero + b"\x00")


def test_pgm_round_trip():
    img = stegrle.GrayImage(2, 2, bytes([1, 2, 3, 4]))
    data = stegrle.write_pgm(img)
    assert data == b"P5\n2 2\n255\n\x01\x02\x03\x04"
    assert stegrle.read_pgm(data) == img
    assert stegrle.to_grayscale(1, 1, [(100, 50, 200)]).pixels == bytes([82])


def test_pipeline():
    carrier = stegrle.synthetic_carrier()
    result = stegrle.run_pipeline(carrier, stegrle.Rect(0, 0, 63, 63), TABLE1, repeat=2)
    assert result["verified"]
    assert result["message"] == TABLE1
    assert result["restored_mse"] == 0.0
    assert result["restored_psnr"] == math.inf
    timing = result["timing"]
    assert set(timing) == {"data-hiding", "rle-encode", "rle-decode", "data-retrieval", "total"}
