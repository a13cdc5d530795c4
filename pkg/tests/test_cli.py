import os

import pytest


@pytest.fixture
def code_file(tmp_path, data_path):
    """Especificación de un código [4,2] sobre F_64"""
    path = tmp_path / 'code.txt'
    path.write_text(f'field = {data_path("f2_6.field")}\nk = 2\ns = 1\ng = [1, a, a^2, a^3]\n')
    return str(path)


class TestRecognizeCommand:
    """Pruebas para el comando recognize"""

    def test_recognize_gabidulin(self, runner, data_path):
        """Prueba el reconocimiento de la generadora [6,3] sobre F_{3^6}"""
        result = runner.invoke(args=[
            'recognize', '--field', data_path('f3_6.field'),
            '--matrix', data_path('f3_6_generator.txt'), '--s', '1',
        ])
        assert result.exit_code == 0
        assert 'verdict=gabidulin s=1 rank_phi=1 row_q_rank=3 col_q_rank=3 ops=333' in result.output

    def test_recognize_all_s(self, runner, data_path):
        """Prueba que --all-s emite un registro por cada s coprimo con m"""
        result = runner.invoke(args=[
            'recognize', '--field', data_path('f3_6.field'),
            '--matrix', data_path('f3_6_generator.txt'), '--all-s',
        ])
        assert result.exit_code == 0
        records = [line for line in result.output.splitlines() if line.startswith('verdict=')]
        assert [r.split()[1] for r in records] == ['s=1', 's=5']

    def test_recognize_human_format(self, runner, data_path):
        """Prueba la salida legible"""
        result = runner.invoke(args=[
            'recognize', '--field', data_path('f3_6.field'),
            '--matrix', data_path('f3_6_generator.txt'), '--format', 'human',
        ])
        assert result.exit_code == 0
        assert 'verdict: gabidulin' in result.output

    def test_recognize_not_mrd_shape(self, runner, tmp_path, data_path):
        """Prueba una generadora sin forma estándar"""
        matrix = tmp_path / 'G.txt'
        matrix.write_text('2 4\n0 1 0 0\n0 0 1 0\n')
        result = runner.invoke(args=['recognize', '--field', data_path('f2_6.field'), '--matrix', str(matrix)])
        assert result.exit_code == 0
        assert 'verdict=not_mrd_shape s=1 ops=' in result.output

    def test_recognize_rank_deficient(self, runner, tmp_path, data_path):
        """Prueba el error de una generadora de rango incompleto"""
        matrix = tmp_path / 'G.txt'
        matrix.write_text('2 3\n1 a a^2\n1 a a^2\n')
        result = runner.invoke(args=['recognize', '--field', data_path('f2_6.field'), '--matrix', str(matrix)])
        assert result.exit_code == 1
        assert 'error=rank_deficient' in result.output

    def test_recognize_bad_s(self, runner, data_path):
        """Prueba un s no coprimo con m"""
        result = runner.invoke(args=[
            'recognize', '--field', data_path('f3_6.field'),
            '--matrix', data_path('f3_6_generator.txt'), '--s', '2',
        ])
        assert result.exit_code == 1
        assert 'error=bad_parameter_s' in result.output

    def test_recognize_square_matrix(self, runner, tmp_path, data_path):
        """Prueba que k = n es un error de uso"""
        matrix = tmp_path / 'G.txt'
        matrix.write_text('2 2\n1 0\n0 1\n')
        result = runner.invoke(args=['recognize', '--field', data_path('f2_6.field'), '--matrix', str(matrix)])
        assert result.exit_code == 2

    def test_recognize_parse_error(self, runner, tmp_path, data_path):
        """Prueba una matriz mal escrita"""
        matrix = tmp_path / 'G.txt'
        matrix.write_text('2 3\n1 a\n')
        result = runner.invoke(args=['recognize', '--field', data_path('f2_6.field'), '--matrix', str(matrix)])
        assert result.exit_code == 1
        assert 'error=parse_error' in result.output


class TestMakeCommand:
    """Pruebas para los comandos make"""

    def test_make_hankel_writes_files(self, runner, tmp_path, data_path):
        """Prueba la construcción de Hankel [6,3] sobre F_64 con --out"""
        out = tmp_path / 'hankel'
        result = runner.invoke(args=[
            'make', 'hankel', '--field', data_path('f2_6.field'),
            '--k', '3', '--n', '6', '--gamma', 'a^3', '--out', str(out),
        ])
        assert result.exit_code == 0
        assert 'kind=hankel k=3 n=6 s=1 ell=14 verdict=gabidulin' in result.output
        assert sorted(os.listdir(out)) == ['X.txt', 'g.txt', 'params.txt', 'transcript.txt']
        with open(data_path('hankel_f2_6_X.golden'), encoding='utf-8') as golden:
            assert (out / 'X.txt').read_text() == golden.read()
        assert 'g = [1, a^45, ' in (out / 'g.txt').read_text()
        assert 'fail' not in (out / 'transcript.txt').read_text()

    def test_make_toeplitz_stdout(self, runner, data_path):
        """Prueba la construcción de Toeplitz sin --out"""
        result = runner.invoke(args=['make', 'toeplitz', '--field', data_path('f2_6.field'), '--k', '2', '--n', '5'])
        assert result.exit_code == 0
        assert '# X.txt' in result.output
        assert 'verdict=gabidulin' in result.output

    def test_make_hankel_with_diagonals(self, runner, data_path):
        """Prueba --b-diagonals"""
        result = runner.invoke(args=[
            'make', 'hankel', '--field', data_path('f2_6.field'),
            '--k', '2', '--n', '4', '--b-diagonals', '1,0,1',
        ])
        assert result.exit_code == 0
        assert 'B = [[1, 0], [0, 1]]' in result.output

    def test_make_hankel_wrong_diagonals(self, runner, data_path):
        """Prueba que el número de diagonales debe ser n - 1"""
        result = runner.invoke(args=[
            'make', 'hankel', '--field', data_path('f2_6.field'),
            '--k', '2', '--n', '4', '--b-diagonals', '1,0',
        ])
        assert result.exit_code == 2

    @pytest.mark.parametrize('diagonals', ['1,5,1', '1,x,1'])
    def test_make_hankel_bad_diagonal_values(self, runner, data_path, diagonals):
        """Prueba valores de --b-diagonals fuera de F_q o no enteros"""
        result = runner.invoke(args=[
            'make', 'hankel', '--field', data_path('f2_6.field'),
            '--k', '2', '--n', '4', '--b-diagonals', diagonals,
        ])
        assert result.exit_code == 1
        assert 'error=parse_error' in result.output

    def test_make_too_long(self, runner, data_path):
        """Prueba n > m"""
        result = runner.invoke(args=['make', 'hankel', '--field', data_path('f2_6.field'), '--k', '3', '--n', '7'])
        assert result.exit_code == 1
        assert 'error=dimension_error' in result.output

    def test_make_from_params(self, runner, data_path):
        """Prueba la construcción desde (α, β, B)"""
        result = runner.invoke(args=[
            'make', 'from-params', '--field', data_path('f2_6.field'), '--params', data_path('hankel_f2_6.params'),
        ])
        assert result.exit_code == 0
        assert 'a^57 a^7 a^13' in result.output
        assert 'kind=from-params k=3 n=6 s=1 verdict=gabidulin' in result.output

    def test_make_from_points(self, runner, tmp_path, code_file, data_path):
        """Prueba la forma estándar y los parámetros desde g"""
        out = tmp_path / 'points'
        result = runner.invoke(args=[
            'make', 'from-points', '--field', data_path('f2_6.field'), '--code', code_file, '--out', str(out),
        ])
        assert result.exit_code == 0
        assert 'kind=from-points k=2 n=4 s=1 verdict=gabidulin' in result.output
        assert (out / 'g.txt').read_text().endswith('g = [1, a, a^2, a^3]\n')


class TestVerifyCommand:
    """Pruebas para el comando verify"""

    def test_verify_worked_examples(self, runner):
        """Prueba la suite de ejemplos trabajados"""
        result = runner.invoke(args=['verify', 'paper-examples'])
        assert result.exit_code == 0
        assert 'suite=paper-examples check=hankel_ell expected=14 found=14 pass' in result.output
        assert 'failed=0 pass' in result.output

    def test_verify_with_options(self, runner):
        """Prueba --q y --m sobre la suite de construcciones estructuradas"""
        result = runner.invoke(args=['verify', 'structured', '--q', '2', '--m', '3'])
        assert result.exit_code == 0
        assert 'suite=structured check=hankel expected=6 found=6 pass' in result.output

    def test_verify_with_field(self, runner, tmp_path):
        """Prueba --field en lugar de --q y --m"""
        path = tmp_path / 'f4_2.field'
        path.write_text('p = 2\ne = 2\nbase_modulus = [1, 1, 1]\nm = 2\next_modulus = [2, 1, 1]\n')
        result = runner.invoke(args=['verify', 'structured', '--field', str(path), '--format', 'human'])
        assert result.exit_code == 0
        assert '[pass] hankel' in result.output

    def test_verify_alias(self, runner):
        """Prueba el nombre alternativo worked-examples"""
        result = runner.invoke(args=['verify', 'worked-examples'])
        assert result.exit_code == 0
        assert 'suite=paper-examples check=f3_6_verdict expected=gabidulin found=gabidulin pass' in result.output

    def test_verify_random_only(self, runner):
        """Prueba --random-only en criteria-equivalence"""
        result = runner.invoke(args=[
            'verify', 'criteria-equivalence', '--q', '3', '--m', '4', '--samples', '10', '--random-only',
        ])
        assert result.exit_code == 0
        assert 'check=exhaustive_k1' not in result.output
        assert 'suite=criteria-equivalence check=random_samples expected=0 found=0 pass' in result.output

    def test_verify_unknown_suite(self, runner):
        """Prueba una suite inexistente"""
        result = runner.invoke(args=['verify', 'no-existe'])
        assert result.exit_code == 1
        assert 'error=unknown_suite' in result.output

    def test_verify_cap_exceeded(self, runner):
        """Prueba que el límite de enumeración se informa como error"""
        result = runner.invoke(args=['verify', 'counting', '--cap', '10'])
        assert result.exit_code == 1
        assert 'error=cap_exceeded' in result.output
