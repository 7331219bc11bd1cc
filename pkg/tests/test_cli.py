import json

import pytest

from cotorsion.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestPf1:
    def test_card(self, capsys):
        code, out = run(capsys, "pf1", "card", "--mod", "12")
        assert code == 0
        assert json.loads(out) == {"m": 12, "cardinality": 24}

    def test_list(self, capsys):
        code, out = run(capsys, "pf1", "list", "--mod", "2")
        assert code == 0
        assert json.loads(out) == [
            {"m": 2, "a": 0, "b": 1},
            {"m": 2, "a": 1, "b": 0},
            {"m": 2, "a": 1, "b": 1},
        ]

    def test_crt(self, capsys):
        code, out = run(capsys, "pf1", "crt", "--mod", "6", "--split", "2,3")
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 12
        assert all(len(r["components"]) == 2 for r in rows)

    def test_crt_bad_moduli(self, capsys):
        code, out = run(capsys, "pf1", "crt", "--mod", "6", "--split", "2,4")
        assert code == 1
        assert json.loads(out)["error"] == "BadModuli"

    def test_text_format(self, capsys):
        code, out = run(capsys, "--format", "text", "pf1", "card", "--mod", "12")
        assert code == 0 and out.strip() == "24"


class TestLattice:
    def test_invariants(self, capsys):
        code, out = run(capsys, "lattice", "invariants", "--rows", "1,2;3,4")
        assert code == 0
        obj = json.loads(out)
        assert obj["index"] == 2 and (obj["d1"], obj["d2"]) == (1, 2)

    def test_reconstruct(self, capsys):
        code, out = run(
            capsys, "lattice", "reconstruct", "--d1", "1", "--d2", "4", "--point", "1:2"
        )
        assert code == 0
        assert json.loads(out) == {"rows": [[1, 2], [0, 4]]}

    def test_enumerate_count(self, capsys):
        code, out = run(capsys, "lattice", "enumerate", "--index", "4")
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 7
        assert all({"lattice", "stratum", "point"} <= set(r) for r in rows)

    def test_enumerate_oracle_mode(self, capsys):
        code, _ = run(capsys, "lattice", "enumerate", "--index", "12", "--oracle")
        assert code == 0

    def test_domain_error_exit_code(self, capsys):
        code, out = run(capsys, "lattice", "invariants", "--rows", "1,2;2,4")
        assert code == 1
        assert json.loads(out)["error"] == "NotFullRank"


class TestZeta:
    def test_z2_identity(self, capsys):
        code, out = run(
            capsys, "zeta", "--series", "z2", "--nmax", "100", "--check-identity"
        )
        assert code == 0
        assert all(r["equal"] for r in json.loads(out))

    def test_z2_identity_text(self, capsys):
        code, out = run(
            capsys, "--format", "text",
            "zeta", "--series", "z2", "--nmax", "100", "--check-identity",
        )
        assert code == 0
        assert out.splitlines() == ["equal up to 100", "equal up to 100"]

    def test_ok_z2_identity(self, capsys):
        code, out = run(
            capsys, "zeta", "--series", "ok-z2", "--disc", "-5",
            "--nmax", "60", "--check-identity",
        )
        assert code == 0
        assert all(r["equal"] for r in json.loads(out))

    def test_series_dump(self, capsys):
        code, out = run(capsys, "zeta", "--series", "pf1", "--nmax", "6")
        assert code == 0
        assert json.loads(out)["coefficients"] == [1, 3, 4, 6, 6, 12]

    def test_csv_export(self, capsys):
        code, out = run(capsys, "--format", "csv", "zeta", "--series", "sigma", "--nmax", "4")
        assert code == 0
        assert out.splitlines() == ["1,1", "2,3", "3,4", "4,7"]

    def test_dedekind_requires_disc(self, capsys):
        with pytest.raises(SystemExit):
            main(["zeta", "--series", "dedekind", "--nmax", "5"])


class TestIdeal:
    def test_factor(self, capsys):
        code, out = run(capsys, "ideal", "factor", "--disc", "-5", "--gens", "6")
        assert code == 0
        obj = json.loads(out)
        assert sorted((f["norm"], f["exponent"]) for f in obj["factors"]) == [
            (2, 2),
            (3, 1),
            (3, 1),
        ]

    def test_mul(self, capsys):
        code, out = run(
            capsys, "ideal", "mul", "--disc", "-5",
            "--lhs", "2,1+w", "--rhs", "2,1+w",
        )
        assert code == 0
        assert json.loads(out)["hnf"] == [[2, 0], [0, 2]]

    def test_quotient(self, capsys):
        code, out = run(
            capsys, "ideal", "quotient", "--disc", "-5", "--lhs", "2", "--rhs", "2,1+w"
        )
        assert code == 0
        assert json.loads(out)["hnf"] == [[1, 1], [0, 2]]

    def test_principal(self, capsys):
        code, out = run(capsys, "ideal", "principal", "--disc", "-5", "--gens", "2,1+w")
        assert code == 0
        assert json.loads(out)["principal"] is False

    def test_primes_above(self, capsys):
        code, out = run(capsys, "ideal", "primes-above", "--disc", "-1", "-p", "5")
        assert code == 0
        obj = json.loads(out)
        assert len(obj) == 2 and all(pa["norm"] == 5 for pa in obj)

    def test_sum(self, capsys):
        code, out = run(
            capsys, "ideal", "sum", "--disc", "-1", "--lhs", "2", "--rhs", "3"
        )
        assert code == 0
        assert json.loads(out)["hnf"] == [[1, 0], [0, 1]]


class TestOkmod:
    def test_invariants(self, capsys):
        code, out = run(
            capsys, "okmod", "invariants", "--disc", "-1", "--gens", "1,1; 0,1+w"
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["quotient_size"] == 2
        assert obj["K"]["hnf"] == [[1, 1], [0, 2]]
        assert obj["L"]["hnf"] == [[1, 0], [0, 1]]

    def test_reconstruct_round_trip(self, capsys):
        code, out = run(
            capsys, "okmod", "reconstruct", "--disc", "-1",
            "--L", "1", "--K", "1+w", "--point", "1:1",
        )
        assert code == 0
        reconstructed = json.loads(out)
        code, out = run(
            capsys, "okmod", "invariants", "--disc", "-1", "--gens", "1,1; 0,1+w"
        )
        assert json.loads(out)["module"] == reconstructed

    def test_enumerate(self, capsys):
        code, out = run(
            capsys, "okmod", "enumerate", "--disc", "-5", "--L", "1", "--K", "2,1+w"
        )
        assert code == 0
        assert json.loads(out)["count"] == 3

    def test_intersect_verify(self, capsys):
        code, out = run(
            capsys, "okmod", "intersect", "--disc", "-1",
            "--modules", "1,1; 0,1+w | 1,2; 0,3", "--verify",
        )
        assert code == 0
        obj = json.loads(out)
        assert all(obj["checks"].values())
        assert obj["K"]["hnf"] == [[3, 3], [0, 6]]


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("pf1", "list", "--mod", "36"),
            ("lattice", "enumerate", "--index", "12"),
            ("zeta", "--series", "ok-pf1", "--disc", "-5", "--nmax", "40"),
            ("okmod", "enumerate", "--disc", "-1", "--L", "1", "--K", "3"),
            ("ideal", "factor", "--disc", "-5", "--gens", "30"),
        ],
    )
    def test_byte_identical_runs(self, capsys, argv):
        code1, out1 = run(capsys, *argv)
        code2, out2 = run(capsys, *argv)
        assert code1 == code2 == 0
        assert out1 == out2

    def test_usage_error_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["lattice", "enumerate"])
        assert exc.value.code == 2
