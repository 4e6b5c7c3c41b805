import pytest

from cmnet.config import parse_config_text, read_config
from cmnet.errors import ConfigError
from cmnet.instances import example_config_text, load_instance, load_instance_text

BASE = example_config_text(2)


def replace(text, old, new):
    assert old in text
    return text.replace(old, new)


def line_of(text, needle):
    return next(n for n, l in enumerate(text.splitlines(), 1) if needle in l)


def test_shipped_configs_load(inst1, inst2):
    assert inst1.name == "example1" and inst1.params.N == -1 and inst1.support == (2,)
    assert inst2.name == "example2" and inst2.support == (2, 3) and inst2.box == 3


def test_load_from_path(tmp_path):
    f = tmp_path / "e.cfg"
    f.write_text(BASE)
    assert load_instance(f).params.N == -2
    with pytest.raises(ConfigError):
        read_config(tmp_path / "missing.cfg")


@pytest.mark.parametrize("old,new,needle", [
    ("P.x = -1", "P.x = 5", "P.x = 5"),
    ("omegaP.y = 0+1/4*w", "omegaP.y = 0-1/4*w", "omegaP.x"),
    ("a4 = -3", "a4 = 1/2", "a4 = 1/2"),
    ("a6 = 1", "a6 = 0\na4x = 1", "a4x"),
    ("N = -2", "N = -4", "N = -4"),
    ("primes = 2, 3", "primes = 2, 4", "primes"),
    ("box = 3", "box = three", "box = three"),
    ("P.y = 2", "P.y = 2+", "P.y = 2+"),
])
def test_errors_carry_line_numbers(old, new, needle):
    text = replace(BASE, old, new)
    with pytest.raises(ConfigError) as exc:
        load_instance_text(text)
    assert exc.value.line == line_of(text, needle), str(exc.value)


def test_conjugate_omega_image_rejected():
    # (1/2, -w/4) is on the curve but is the image of P under the conjugate endomorphism
    text = replace(BASE, "omegaP.y = 0+1/4*w", "omegaP.y = 0-1/4*w")
    with pytest.raises(ConfigError, match="formal-group"):
        load_instance_text(text)


@pytest.mark.parametrize("text,msg", [
    ("[field]\nN = -1\n[bogus]\n", "unknown section"),
    ("N = -1\n", "outside any section"),
    ("[field]\nN = -1\nN = -2\n", "duplicate key"),
    ("[field]\nM = 3\n", "unknown key"),
    ("[field]\nN -1\n", "cannot parse"),
    ("[field]\nN = -1\n", "missing"),
])
def test_grammar_errors(text, msg):
    with pytest.raises(ConfigError, match=msg):
        parse_config_text(text)


def test_comments_and_blank_lines_ignored():
    cfg = parse_config_text("# c\n\n[field]\n  N = -7  \n[point]\nP.x=1\nP.y=1\nomegaP.x=1\nomegaP.y=1\n"
                            "[support]\nprimes=2\n")
    assert cfg["field"]["N"].value == "-7" and cfg["field"]["N"].line == 4


def test_singular_curve_rejected():
    text = BASE
    for k in ("a2 = 1", "a4 = -3", "a6 = 1"):
        text = replace(text, k, k.split("=")[0] + "= 0")
    with pytest.raises(ConfigError, match="invalid curve") as exc:
        load_instance_text(text)
    assert exc.value.line == line_of(text, "a1 = 0")
