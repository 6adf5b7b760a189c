import argparse
import json
import sys
import traceback
from collections import namedtuple

from . import __version__
from . import (boundstate, continuum, coupling, hypercritical, oracle,
               specialfn, verify, wellmatch)
from .exceptions import context, InvSquareError, VerificationError
from .model import BoundState
from .utils import format_csv, format_table


class _Formatter(argparse.HelpFormatter):
    """Format with a fixed argument width, due to bug in argparse measuring
    argument widths"""
    @property
    def _action_max_length(self):
        return 16

    @_action_max_length.setter
    def _action_max_length(self, value):
        pass


def fail(msg, prefix=True):
    if prefix:
        msg = 'Error: %s' % msg
    print(msg, file=sys.stderr)
    context.is_cli = False  # contextmanager skipped by SystemExit
    sys.exit(1)


def fail_json(exc):
    fail(json.dumps({'error': type(exc).__name__, 'message': str(exc)}),
         prefix=False)


def add_help(parser):
    parser.add_argument("--help", "-h", action='help',
                        help="Show this help message then exit")


def arg(*args, **kwargs):
    return (args, kwargs)


_Group = namedtuple('_Group', ['args', 'required'])


def exclusive(*args, required=False):
    return _Group(args, required)


def subcommand(subparsers, name, help, *args, hidden=False):
    def _(func):
        kwargs = {} if hidden else {'help': help}
        parser = subparsers.add_parser(name,
                                       formatter_class=_Formatter,
                                       description=help,
                                       add_help=False,
                                       **kwargs)
        parser.set_defaults(func=func)
        for a in args:
            if isinstance(a, _Group):
                group = parser.add_mutually_exclusive_group(
                    required=a.required)
                for g in a.args:
                    group.add_argument(*g[0], **g[1])
            else:
                parser.add_argument(*a[0], **a[1])
        add_help(parser)
        func.parser = parser
        return func
    return _


def node(subs, name, help, hidden=False):
    @subcommand(subs, name, help, hidden=hidden)
    def f():
        fail(f.parser.format_usage(), prefix=False)
    f.subs = f.parser.add_subparsers(metavar='command', dest='command')
    f.subs.required = True
    return f


def emit_json(obj):
    print(obj.to_json() if hasattr(obj, 'to_json') else json.dumps(obj))


def emit_csv(columns, rows, out='-'):
    text = format_csv(columns, rows)
    if out == '-':
        sys.stdout.write(text)
    else:
        with open(out, 'w') as fil:
            fil.write(text)


entry = argparse.ArgumentParser(prog="invsquare",
                                description=("Bound states and scattering "
                                             "in the inverse-square "
                                             "potential"),
                                formatter_class=_Formatter,
                                add_help=False)
add_help(entry)
entry.add_argument("--version", action='version',
                   version='%(prog)s ' + __version__,
                   help="Show version then exit")
entry.set_defaults(func=lambda: fail(entry.format_usage(), prefix=False))
entry_subs = entry.add_subparsers(metavar='command', dest='command')
entry_subs.required = True

# Common arguments
ell = arg('--ell', type=int, required=True,
          help='Angular momentum quantum number')
gamma = arg('--gamma', type=float, required=True,
            help='Dimensionless coupling 2 m lambda / hbar**2')
mu = arg('--mu', type=float, required=True,
         help='Imaginary order, sqrt(Gamma - 1/4)')


@subcommand(entry_subs,
            'regime', 'Classify a coupling',
            ell, gamma)
def regime(ell, gamma):
    emit_json(coupling.make_params(ell, gamma))


@subcommand(entry_subs,
            'boundstate', 'Evaluate the subcritical bound state',
            ell, gamma,
            arg('--kappa', type=float, required=True,
                help='Energy scale, E = -kappa**2'),
            exclusive(arg('--rho', type=float,
                          help='Evaluate chi at rho = kappa r'),
                      arg('--checks', action='store_true',
                          help='Closed-form energy balance (default)'),
                      arg('--numeric', action='store_true',
                          help=('Energy balance from quadrature and '
                                'extrapolation'))))
def boundstate_(ell, gamma, kappa, rho=None, checks=False, numeric=False):
    state = BoundState(coupling.make_params(ell, gamma), kappa)
    if rho is not None:
        emit_json({'chi': boundstate.chi(state, rho)})
    elif numeric:
        emit_json(boundstate.numerical_checks(state.nu, kappa))
    else:
        emit_json(boundstate.energy_balance(state.nu, kappa))


@subcommand(entry_subs,
            'gamma-prime', "The r0 -> 0 well strength gamma'",
            exclusive(arg('--nu', type=float, help='Real order, 0 <= nu <= 1/2'),
                      arg('--gamma', type=float,
                          help='l = 0 coupling, 0 <= gamma <= 1/4'),
                      required=True))
def gamma_prime(nu=None, gamma=None):
    if nu is not None:
        emit_json(wellmatch.gamma_prime_limit(nu))
    else:
        emit_json(wellmatch.gamma_prime_for_gamma(gamma))


@subcommand(entry_subs,
            'fig1', "Tabulate gamma' against 1/2 - nu as CSV",
            arg('--points', type=int, required=True,
                help='Number of rows, at least 2'),
            arg('--out', default='-', metavar='PATH',
                help='Output file, "-" for standard output (default)'))
def fig1(points, out='-'):
    rows = wellmatch.fig1_table(points)
    emit_csv(wellmatch.GammaPrimeRow._fields, rows, out=out)


@subcommand(entry_subs,
            'fit', "Least-squares polynomial fit of gamma'",
            arg('--degree', type=int, choices=(1, 2), required=True,
                help='Polynomial degree'),
            arg('--grid-size', type=int, default=None,
                help='Number of grid points, at least 20'))
def fit(degree, grid_size=None):
    emit_json(wellmatch.fit_curve(degree, grid_size=grid_size))


@subcommand(entry_subs,
            'continuum', 'Orthogonalize a continuum state',
            arg('--nu', type=float, required=True,
                help='Real order, 0 <= nu < 1/2'),
            arg('--k0', type=float, required=True,
                help='Bound state scale kappa'),
            arg('--k1', type=float, required=True,
                help='Continuum wave number'),
            arg('--defect', action='store_true',
                help='Also compute the extrapolated orthogonality defect'))
def continuum_(nu, k0, k1, defect=False):
    emit_json(continuum.coefficients(nu, k0, k1, defect=defect))


@subcommand(entry_subs,
            'spectrum', 'The hypercritical ladder or its near-origin zeros',
            mu,
            arg('--e0', type=float, default=None,
                help='Reference scale |E0|, default 1'),
            arg('--n-min', type=int, default=None, help='Lowest level index'),
            arg('--n-max', type=int, default=None, help='Highest level index'),
            arg('--zeros', action='store_true',
                help='Tabulate predicted against computed zeros as CSV'),
            arg('--rho-max', type=float, default=None,
                help='Upper end of the zero search, default 0.05'),
            arg('--rho-min', type=float, default=None,
                help='Lower end of the zero search'))
def spectrum(mu, e0=None, n_min=None, n_max=None, zeros=False, rho_max=None,
             rho_min=None):
    if zeros:
        if e0 is not None or n_min is not None or n_max is not None:
            spectrum.parser.error("--zeros cannot be combined with --e0, "
                                  "--n-min or --n-max")
        rows = hypercritical.zero_table(mu, 0.05 if rho_max is None else
                                        rho_max, rho_min=rho_min)
        emit_csv(hypercritical.ZeroRow._fields, rows)
        return
    if rho_max is not None or rho_min is not None:
        spectrum.parser.error("--rho-max and --rho-min require --zeros")
    if n_min is None or n_max is None:
        spectrum.parser.error("--n-min and --n-max are required")
    emit_json(hypercritical.ladder(mu, 1.0 if e0 is None else e0,
                                   n_min, n_max))


oracle_ = node(entry_subs, 'oracle', 'Independent numerical oracles')


@subcommand(oracle_.subs,
            'numerov', 'Ground state of the regularized potential',
            arg('--gamma', type=float, required=True,
                help='Exterior coupling, 0 <= gamma <= 1/4'),
            arg('--gamma-prime', type=float, required=True,
                help="Interior well strength gamma'"),
            arg('--r0', type=float, required=True,
                help='Regularization radius'),
            arg('--r-max', type=float, default=None,
                help='Outer boundary of the integration'))
def oracle_numerov(gamma, gamma_prime, r0, r_max=None):
    emit_json(oracle.numerov_bound_state(gamma, gamma_prime, r0,
                                         r_max=r_max))


@subcommand(entry_subs,
            'verify', 'Run the cross-check suite',
            arg('--check', dest='names', action='append',
                choices=verify.check_names(), metavar='NAME',
                help=('Run only this check, can be used multiple times. '
                      'One of: %s' % ', '.join(verify.check_names()))))
def verify_(names=None):
    results = verify.run_checks(names)
    print(format_table(['check', 'passed', 'detail'],
                       [(r.name, 'yes' if r.passed else 'NO', r.detail)
                        for r in results]))
    failed = [r.name for r in results if not r.passed]
    if failed:
        raise VerificationError("%d of %d checks failed: %s"
                                % (len(failed), len(results),
                                   ', '.join(failed)))


specialfn_ = node(entry_subs, 'specialfn', 'Special function evaluation',
                  hidden=True)


@subcommand(specialfn_.subs,
            'eval', 'Evaluate a special function',
            arg('--name', required=True, choices=sorted(specialfn.FUNCTIONS),
                metavar='NAME', help='The function name'),
            arg('--order', type=float, default=None,
                help='The order, required for Bessel functions'),
            arg('--x', type=float, required=True, help='The argument'))
def specialfn_eval(name, x, order=None):
    emit_json(specialfn.evaluate(name, x, order=order))


def main(args=None):
    kwargs = vars(entry.parse_args(args=args))
    kwargs.pop('command', None)  # Drop unnecessary `command` arg
    func = kwargs.pop('func')
    try:
        with context.set_cli():
            func(**kwargs)
    except InvSquareError as exc:
        fail_json(exc)
    except Exception:
        fail("Unexpected Error:\n%s" % traceback.format_exc(), prefix=False)
    sys.exit(0)


if __name__ == '__main__':
    main()
