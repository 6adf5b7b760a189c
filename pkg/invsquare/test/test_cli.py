import json
import math

import pytest

import invsquare
from invsquare.exceptions import context
from invsquare.cli import main
from invsquare.model import (ClosedFormChecks, ContinuumCoefficients,
                             CouplingParams, EvalResult, FitResult,
                             NumerovSolution, SpectrumLadder, WellMatchResult)


def run_command(command, error=False):
    with pytest.raises(SystemExit) as exc:
        main([arg for arg in command.split(' ') if arg])
    assert not context.is_cli
    if error:
        assert exc.value.code != 0
    else:
        assert exc.value.code == 0
    return exc.value.code


@pytest.mark.parametrize('command',
                         ['',
                          'regime',
                          'boundstate',
                          'gamma-prime',
                          'fig1',
                          'fit',
                          'continuum',
                          'spectrum',
                          'oracle',
                          'oracle numerov',
                          'verify',
                          'specialfn eval'])
def test_cli_help(command, capsys):
    run_command(command + ' -h')

    out, err = capsys.readouterr()
    assert not err
    assert 'usage: invsquare' in out


def test_cli_hidden_commands(capsys):
    run_command('-h')
    out, _ = capsys.readouterr()
    assert 'regime' in out
    assert 'specialfn' not in out


@pytest.mark.parametrize('group', ['', 'oracle', 'specialfn'])
def test_cli_call_command_group(group, capsys):
    assert run_command(group, error=True) == 2

    out, err = capsys.readouterr()
    assert not out
    assert 'usage: invsquare' in err


def test_cli_version(capsys):
    run_command('--version')

    out, err = capsys.readouterr()
    assert not err
    assert invsquare.__version__ in out


@pytest.mark.parametrize('command',
                         ['regime --ell 0',
                          'regime --ell 0 --gamma foo',
                          'regime --ell 0.5 --gamma 0.1',
                          'boundstate --ell 0 --gamma 0.1 --kappa 1 '
                          '--rho 1 --checks',
                          'gamma-prime',
                          'gamma-prime --nu 0 --gamma 0.25',
                          'fit --degree 3',
                          'spectrum --mu 1 --zeros --n-min 0',
                          'spectrum --mu 1 --n-min 0',
                          'spectrum --mu 1 --n-min 0 --n-max 1 --rho-max 0.01',
                          'verify --check foo',
                          'specialfn eval --name foo --x 1',
                          'frobnicate'])
def test_cli_usage_errors(command, capsys):
    assert run_command(command, error=True) == 2

    out, err = capsys.readouterr()
    assert not out
    assert 'usage: invsquare' in err


def test_cli_regime(capsys):
    run_command('regime --ell 1 --gamma 3.25')
    out, err = capsys.readouterr()
    assert not err
    params = CouplingParams.from_json(out)
    assert params == invsquare.coupling.make_params(1, 3.25)
    assert json.loads(out)['regime'] == 'HYPERCRITICAL'


def test_cli_boundstate(capsys):
    run_command('boundstate --ell 0 --gamma 0.1875 --kappa 2 --rho 0.5')
    out, err = capsys.readouterr()
    assert not err
    assert json.loads(out) == {'chi': invsquare.boundstate.chi_nu(0.25, 0.5)}

    run_command('boundstate --ell 0 --gamma 0.1875 --kappa 2 --checks')
    out, err = capsys.readouterr()
    checks = ClosedFormChecks.from_json(out)
    assert checks == invsquare.boundstate.energy_balance(0.25, 2.0)

    run_command('boundstate --ell 0 --gamma 0.1875 --kappa 2')
    out, err = capsys.readouterr()
    assert ClosedFormChecks.from_json(out) == checks


def test_cli_boundstate_numeric(capsys):
    run_command('boundstate --ell 0 --gamma 0.1875 --kappa 2 --numeric')
    out, err = capsys.readouterr()
    checks = ClosedFormChecks.from_json(out)
    assert checks.normalization == pytest.approx(
        invsquare.boundstate.normalization_closed(0.25), rel=1e-7)


@pytest.mark.parametrize('command',
                         ['gamma-prime --nu 0.3',
                          'fig1 --points 4',
                          'spectrum --mu 0.7 --n-min -2 --n-max 2',
                          'continuum --nu 0.25 --k0 1 --k1 2'])
def test_cli_output_is_deterministic(command, capsys):
    outputs = []
    for _ in range(2):
        run_command(command)
        outputs.append(capsys.readouterr().out)
    assert outputs[0]
    assert outputs[0] == outputs[1]


def test_cli_gamma_prime(capsys):
    run_command('gamma-prime --nu 0')
    out, err = capsys.readouterr()
    assert not err
    res = WellMatchResult.from_json(out)
    assert res.gamma_prime == pytest.approx(1.35853, abs=1e-4)

    run_command('gamma-prime --gamma 0')
    out, err = capsys.readouterr()
    res = WellMatchResult.from_json(out)
    assert res.gamma_prime == pytest.approx(2.46740, abs=1e-4)
    assert res.gamma == 0.0


def test_cli_fig1(capsys, tmpdir):
    run_command('fig1 --points 3 --out -')
    out, err = capsys.readouterr()
    assert not err
    lines = out.splitlines()
    assert lines[0] == 'half_minus_nu,gamma,gamma_prime,gamma_prime_linear_fit'
    assert len(lines) == 4
    first = lines[1].split(',')
    last = lines[-1].split(',')
    assert first[:2] == ['0', '0']
    assert float(first[2]) == pytest.approx(2.46740, abs=1e-4)
    assert last[:2] == ['0.5', '0.25']
    assert float(last[2]) == pytest.approx(1.35853, abs=1e-4)

    path = str(tmpdir.join('fig1.csv'))
    run_command('fig1 --points 3 --out %s' % path)
    out, err = capsys.readouterr()
    assert not out
    with open(path) as fil:
        assert fil.read().splitlines() == lines


def test_cli_fit(capsys):
    run_command('fit --degree 1')
    out, err = capsys.readouterr()
    fit = FitResult.from_json(out)
    assert fit.coefficients == pytest.approx([2.4867, -2.2265], rel=0.02)


def test_cli_continuum(capsys):
    run_command('continuum --nu 0 --k0 1 --k1 2')
    out, err = capsys.readouterr()
    c = ContinuumCoefficients.from_json(out)
    assert c.branch == 'NU_ZERO'
    assert c.ratio == pytest.approx(2 / math.pi * math.log(0.5))
    assert 'defect' not in json.loads(out)


def test_cli_spectrum(capsys):
    run_command('spectrum --mu 1 --n-min -1 --n-max 1')
    out, err = capsys.readouterr()
    spectrum = SpectrumLadder.from_json(out)
    assert spectrum.E0_magnitude == 1.0
    assert spectrum.energies[1] == -1.0

    run_command('spectrum --mu 1 --e0 2 --n-min 0 --n-max 0')
    out, err = capsys.readouterr()
    assert SpectrumLadder.from_json(out).energies == [-2.0]


def test_cli_spectrum_zeros(capsys):
    run_command('spectrum --zeros --mu 1 --rho-max 0.01')
    out, err = capsys.readouterr()
    lines = out.splitlines()
    assert lines[0] == 'm,predicted,computed,relative_deviation'
    assert len(lines) > 1
    for line in lines[1:]:
        assert float(line.split(',')[-1]) <= 0.01


def test_cli_oracle_numerov(capsys):
    gamma_prime = math.pi ** 2 / 4 + 0.2
    run_command('oracle numerov --gamma 0 --gamma-prime %r --r0 1'
                % gamma_prime)
    out, err = capsys.readouterr()
    sol = NumerovSolution.from_json(out)
    assert sol.node_count == 0
    assert sol.x == pytest.approx(
        invsquare.wellmatch.finite_r0_match(0.0, gamma_prime), rel=1e-6)


def test_cli_specialfn_eval(capsys):
    run_command('specialfn eval --name bessel_k --order 0.5 --x 1')
    out, err = capsys.readouterr()
    res = EvalResult.from_json(out)
    assert res.value == pytest.approx(math.sqrt(math.pi / 2) * math.exp(-1))


@pytest.mark.parametrize('command, error',
                         [('boundstate --ell 0 --gamma 0.25 --kappa 1 '
                           '--checks', 'PoleError'),
                          ('boundstate --ell 0 --gamma 0.5 --kappa 1 '
                           '--rho 1', 'DomainError'),
                          ('gamma-prime --nu 0.7', 'DomainError'),
                          ('continuum --nu 0.49 --k0 1 --k1 1e-320',
                           'OutOfRangeError'),
                          ('spectrum --mu 0.01 --n-min 0 --n-max 5',
                           'OutOfRangeError'),
                          ('oracle numerov --gamma 0 --gamma-prime 2 --r0 1',
                           'NoRootError'),
                          ('specialfn eval --name bessel_k --x 1',
                           'DomainError')])
def test_cli_computation_errors(command, error, capsys):
    assert run_command(command, error=True) == 1

    out, err = capsys.readouterr()
    assert not out
    msg = json.loads(err)
    assert msg['error'] == error
    assert msg['message']


def test_cli_verify(capsys):
    run_command('verify --check bracket-roots --check energy-balance')
    out, err = capsys.readouterr()
    assert not err
    lines = out.splitlines()
    assert lines[0].split() == ['CHECK', 'PASSED', 'DETAIL']
    assert len(lines) == 3
    assert all(line.split()[1] == 'yes' for line in lines[1:])


def test_cli_verify_failure(capsys, monkeypatch):
    monkeypatch.setitem(invsquare.verify.CHECKS, 'bracket-roots',
                        lambda: (False, 'forced'))
    assert run_command('verify --check bracket-roots', error=True) == 1

    out, err = capsys.readouterr()
    assert 'NO' in out
    assert json.loads(err)['error'] == 'VerificationError'
