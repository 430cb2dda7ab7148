from ucycle.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_golden(capsys):
    code, out, _ = run(capsys, "generate", "--n", "3", "--k", "4", "--wmin", "9")
    assert code == 0
    assert out.strip() == "14423424324433343444"


def test_generate_unconstrained(capsys):
    code, out, _ = run(capsys, "generate", "--n", "4", "--k", "2")
    assert code == 0
    assert out.strip() == "1111211221212222"


def test_generate_down(capsys):
    code, out, _ = run(capsys, "generate", "--n", "3", "--k", "3", "--wmax", "5")
    assert code == 0
    assert out.strip() == "3112212111"


def test_rank_golden(capsys):
    code, out, _ = run(capsys, "rank", "--n", "4", "--k", "2", "--string", "2112")
    assert code == 0
    assert out.strip() == "5"


def test_rank_down(capsys):
    code, out, _ = run(
        capsys, "rank", "--n", "3", "--k", "3", "--wmax", "5", "--string", "131"
    )
    assert code == 0
    assert out.strip() == "10"


def test_unrank(capsys):
    code, out, _ = run(
        capsys, "unrank", "--n", "3", "--k", "4", "--wmin", "9", "--rank", "3"
    )
    assert code == 0
    assert out.strip() == "423"


def test_subset_unrank_golden(capsys):
    code, out, _ = run(
        capsys, "subset", "unrank", "--n", "5", "--t", "3", "--rank", "4"
    )
    assert code == 0
    assert out.strip() == "{2,4,5}"


def test_subset_rank(capsys):
    code, out, _ = run(
        capsys, "subset", "rank", "--n", "5", "--t", "3", "--string", "3,4,5"
    )
    assert code == 0
    assert out.strip() == "1"


def test_subset_encode_decode(capsys):
    code, out, _ = run(
        capsys, "subset", "encode", "--n", "5", "--t", "3", "--string", "{1,4,5}"
    )
    assert code == 0
    assert out.strip() == "131"
    code, out, _ = run(
        capsys, "subset", "decode", "--n", "5", "--t", "3", "--string", "131"
    )
    assert code == 0
    assert out.strip() == "{1,4,5}"


def test_multiset_round(capsys):
    code, out, _ = run(
        capsys, "multiset", "rank", "--n", "3", "--t", "3", "--string", "0,2,2"
    )
    assert code == 0
    assert out.strip() == "10"
    code, out, _ = run(
        capsys, "multiset", "unrank", "--n", "3", "--t", "3", "--rank", "5"
    )
    assert code == 0
    assert out.strip() == "{1,1,2}"


def test_necklaces_listing(capsys):
    code, out, _ = run(capsys, "necklaces", "--n", "4", "--k", "2", "--wmin", "6")
    assert code == 0
    assert out.split() == ["1122", "1212", "1222", "2222"]


def test_dotted_output_large_alphabet(capsys):
    code, out, _ = run(capsys, "generate", "--n", "1", "--k", "11")
    assert code == 0
    assert out.strip() == "1.2.3.4.5.6.7.8.9.10.11"
    code, out, _ = run(capsys, "rank", "--n", "1", "--k", "11", "--string", "5")
    assert code == 0
    assert out.strip() == "5"


def test_json_format(capsys):
    code, out, _ = run(
        capsys, "unrank", "--n", "3", "--k", "4", "--wmin", "9", "--rank", "3",
        "--format", "json",
    )
    assert code == 0
    assert out.strip() == "[4, 2, 3]"


def test_usage_errors_exit_1(capsys):
    code, _, err = run(capsys, "generate", "--n", "3")
    assert code == 1
    code, _, err = run(capsys, "rank", "--n", "3", "--k", "4", "--wmin", "9",
                       "--wmax", "10", "--string", "423")
    assert code == 1
    code, _, _ = run(capsys, "subset", "rank", "--n", "5", "--t", "3")
    assert code == 1
    code, _, _ = run(capsys, "nosuchcommand")
    assert code == 1
    code, _, _ = run(capsys)
    assert code == 1


def test_constraint_violations_exit_2(capsys):
    code, _, err = run(capsys, "generate", "--n", "3", "--k", "2", "--wmin", "7")
    assert code == 2
    assert "error" in err
    code, _, _ = run(capsys, "rank", "--n", "3", "--k", "4", "--wmin", "9",
                     "--string", "111")
    assert code == 2
    code, _, _ = run(capsys, "unrank", "--n", "3", "--k", "4", "--wmin", "9",
                     "--rank", "21")
    assert code == 2
    code, _, _ = run(capsys, "subset", "rank", "--n", "5", "--t", "3",
                     "--string", "1,1,2")
    assert code == 2


def test_selftest_small_grid(capsys):
    code, out, _ = run(capsys, "selftest", "--nmax", "3", "--kmax", "3")
    assert code == 0
    assert "failures: 0" in out


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
    assert run(capsys, "generate", "--help")[0] == 0
