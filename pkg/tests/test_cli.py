import filecmp
import os

import pytest

from isoshare.cli import (
    EXIT_CORRUPT,
    EXIT_DIGEST,
    EXIT_INVALID,
    EXIT_IO,
    EXIT_NOT_ENOUGH,
    EXIT_OK,
    bits_to_hex,
    hex_to_bits,
    main,
)

CONFIG = """\
# desk-scale demo deal
p = 431
a = 1
b = 0
n = 3
t = 2
gamma = 25
lambda = 8
N = 16
ell_iso = 3
e_iso = 2
code.kind = binary-expanded-rs
code.r = 4
code.d = 6
seed = demo
"""


@pytest.fixture
def config_path(tmp_path):
    path = tmp_path / "demo.cfg"
    path.write_text(CONFIG)
    return str(path)


def _deal(config_path, outdir, *extra):
    return main(["deal", "-c", config_path, "-o", outdir, *extra])


def test_hex_packing_roundtrip():
    bits = (1, 0, 1, 1, 0, 0, 1, 0, 1)
    text = bits_to_hex(bits)
    assert len(text) == 3  # ceil(9/4) nibbles
    assert hex_to_bits(text, 9) == bits
    with pytest.raises(ValueError):
        hex_to_bits("fff", 9)  # nonzero fill bits
    with pytest.raises(ValueError):
        hex_to_bits("zz", 8)


def test_check_reports_interval_and_costs(config_path, capsys):
    assert main(["check", "-c", config_path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "t_interval: [2, 3]" in out
    assert "cost_bits_s1: 50" in out
    assert "cost_bits_s3: 0" in out
    assert "valid: yes" in out
    # gamma = 25 is far above the symbol width, so burst mode is off.
    assert "burst_width_condition: violated" in out
    assert "burst_distance_condition: ok" in out


def test_check_flags_bad_threshold(tmp_path, capsys):
    path = tmp_path / "bad.cfg"
    path.write_text(CONFIG.replace("t = 2", "t = 1"))
    assert main(["check", "-c", str(path)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "valid: no" in out
    assert "violation:" in out


def test_deal_then_recover_roundtrip(config_path, tmp_path, capsys):
    outdir = str(tmp_path / "deal")
    assert _deal(config_path, outdir) == EXIT_OK
    capsys.readouterr()
    public = os.path.join(outdir, "public.isoshare")
    shares = [os.path.join(outdir, f"share_{i}.isoshare") for i in range(3)]
    assert main(["recover", "-p", public, shares[0], shares[2]]) == EXIT_OK
    out = capsys.readouterr().out
    assert "degree: 9" in out
    assert "steps: 2" in out
    assert "point_x:" in out and "image_y:" in out


def test_deal_is_deterministic(config_path, tmp_path):
    a = str(tmp_path / "a")
    b = str(tmp_path / "b")
    assert _deal(config_path, a) == EXIT_OK
    assert _deal(config_path, b) == EXIT_OK
    for name in os.listdir(a):
        assert filecmp.cmp(os.path.join(a, name), os.path.join(b, name), shallow=False)


def test_deal_seed_changes_output(config_path, tmp_path):
    a = str(tmp_path / "a")
    b = str(tmp_path / "b")
    assert _deal(config_path, a) == EXIT_OK
    assert _deal(config_path, b, "--seed", "other") == EXIT_OK
    assert not filecmp.cmp(
        os.path.join(a, "public.isoshare"),
        os.path.join(b, "public.isoshare"),
        shallow=False,
    )


def test_recover_with_too_few_shares(config_path, tmp_path, capsys):
    outdir = str(tmp_path / "deal")
    assert _deal(config_path, outdir) == EXIT_OK
    public = os.path.join(outdir, "public.isoshare")
    share0 = os.path.join(outdir, "share_0.isoshare")
    assert main(["recover", "-p", public, share0]) == EXIT_NOT_ENOUGH


def test_recover_with_tampered_share(config_path, tmp_path, capsys):
    outdir = str(tmp_path / "deal")
    assert _deal(config_path, outdir) == EXIT_OK
    share1 = os.path.join(outdir, "share_1.isoshare")
    lines = open(share1).read().splitlines()
    for i, line in enumerate(lines):
        if line.startswith("bits "):
            hexpart = line.split(" ", 1)[1]
            flipped = ("0" if hexpart[0] != "0" else "1") + hexpart[1:]
            lines[i] = f"bits {flipped}"
    open(share1, "w").write("\n".join(lines) + "\n")
    public = os.path.join(outdir, "public.isoshare")
    share0 = os.path.join(outdir, "share_0.isoshare")
    assert main(["recover", "-p", public, share0, share1]) == EXIT_CORRUPT


def test_recover_with_foreign_share(config_path, tmp_path, capsys):
    out_a = str(tmp_path / "a")
    out_b = str(tmp_path / "b")
    assert _deal(config_path, out_a) == EXIT_OK
    assert _deal(config_path, out_b, "--seed", "other") == EXIT_OK
    public = os.path.join(out_a, "public.isoshare")
    foreign = os.path.join(out_b, "share_0.isoshare")
    mine = os.path.join(out_a, "share_1.isoshare")
    assert main(["recover", "-p", public, foreign, mine]) == EXIT_DIGEST


def test_tampered_public_file_rejected(config_path, tmp_path, capsys):
    outdir = str(tmp_path / "deal")
    assert _deal(config_path, outdir) == EXIT_OK
    public = os.path.join(outdir, "public.isoshare")
    text = open(public).read().replace("t 2", "t 3")
    open(public, "w").write(text)
    share0 = os.path.join(outdir, "share_0.isoshare")
    share1 = os.path.join(outdir, "share_1.isoshare")
    assert main(["recover", "-p", public, share0, share1]) == EXIT_DIGEST


def test_missing_files_are_io_errors(config_path, tmp_path, capsys):
    assert main(["recover", "-p", str(tmp_path / "nope"), "x"]) == EXIT_IO
    assert main(["check", "-c", str(tmp_path / "nope.cfg")]) in (
        EXIT_IO,
        EXIT_INVALID,
    )


def test_invalid_config_rejected(tmp_path, capsys):
    path = tmp_path / "bad.cfg"
    path.write_text(CONFIG.replace("code.kind = binary-expanded-rs",
                                   "code.kind = mystery"))
    outdir = str(tmp_path / "deal")
    assert main(["deal", "-c", str(path), "-o", outdir]) == EXIT_INVALID


def test_deal_refuses_invalid_params_without_force(tmp_path, capsys):
    path = tmp_path / "bad.cfg"
    path.write_text(CONFIG.replace("t = 2", "t = 1"))
    outdir = str(tmp_path / "deal")
    assert main(["deal", "-c", str(path), "-o", outdir]) == EXIT_INVALID
    assert not os.path.exists(os.path.join(outdir, "public.isoshare"))
