import hausdorff_calculus.core as core
import hausdorff_calculus.fields as fields
import hausdorff_calculus.flowpde as flowpde
import hausdorff_calculus.suite as suite
import hausdorff_calculus.vecops as vecops

import dataclasses
import logging
import numpy as np


logger = logging.getLogger(__name__)

PAPER = vecops.Convention.PAPER_LITERAL


@dataclasses.dataclass(frozen=True)
class ErratumItem:
    """ One printed formula whose literal reading fails, the reading adopted instead and a numerical witness """

    key: str
    location: str
    literal: str
    adopted: str
    witness: float
    vanishes_classically: bool
    expected: float = None

    def to_dict(self):
        """ Gets the item as a plain dictionary """

        return dataclasses.asdict(self)


def _field(func, polynomial=True):
    return fields.ScalarField3D(func, polynomial=polynomial)


def _stretched_exponential(mu, samples):
    case = core.ClosedFormCase(core.TableIdentity.I_STRETCHED_EXPONENTIAL, literal=True)
    return ErratumItem(
        key='stretched_exponential_antiderivative',
        location='integral table, stretched exponential row',
        literal='I(e^(beta t^mu)) = beta e^(beta t^mu) + C',
        adopted='I(e^(beta t^mu)) = e^(beta t^mu) / beta + C',
        witness=core.closed_form_table_check(case, mu, samples),
        vanishes_classically=False)


def _partials(mu):
    f = _field(lambda x, y, z: mu.map(x) + 2.0 * mu.map(y) + 3.0 * mu.map(z))
    point = (1.5, 1.5, 1.5)
    along_x = fields.chen_partial(f, 0, point, mu)
    gap = max(abs(along_x - fields.chen_partial(f, axis, point, mu)) for axis in (1, 2))
    return ErratumItem(
        key='y_z_chen_partials',
        location='Chen partial derivatives in y and z',
        literal='the y and z partials repeat the x partial',
        adopted='the y and z partials differentiate in y^mu and z^mu',
        witness=float(gap),
        vanishes_classically=False,
        expected=2.0)


def _laplacian(mu):
    f = _field(lambda x, y, z: np.power(x, 2.0 * mu.mu))
    point = (1.5, 1.5, 1.5)
    composed = vecops.laplace_chen(f, point, mu, vecops.LaplacianForm.COMPOSED, PAPER, order=vecops.NESTED_ORDER)
    second = vecops.laplace_chen(f, point, mu, vecops.LaplacianForm.PAPER_SECOND_ORDER, PAPER,
                                 order=vecops.NESTED_ORDER)
    expected = abs(2.0 * mu.mu * (2.0 * mu.mu - 1.0) - 2.0 * mu.mu ** 2) * 1.5 ** (2.0 * mu.mu - 2.0)
    return ErratumItem(
        key='laplace_chen_second_equality',
        location='Laplace-Chen operator, expanded form',
        literal='sum mu^2 x^(2mu-2) d^2 f / d(x^mu)^2',
        adopted='divergence of the gradient, including mu (mu - 1) x^(mu-2) df/d(x^mu)',
        witness=float(abs(composed - second)),
        vanishes_classically=True,
        expected=float(expected))


def _arc_length(mu):
    curve = fields.ParametricCurve.mapped_segment((1.0, 1.0, 1.0), (float(mu.unmap(2.0)), 1.0, 1.0), mu)
    length = fields.arc_length(curve, mu)
    return ErratumItem(
        key='arc_length_mu_factor',
        location='Hausdorff arc length',
        literal='integral without the overall factor mu',
        adopted='integral of |dl| with dl_i = mu x_i^(mu-1) dx_i',
        witness=abs(length - length / mu.mu),
        vanishes_classically=True,
        expected=abs(1.0 - 1.0 / mu.mu))


def _curl_rows(mu):
    W = fields.VectorField3D([_field(lambda x, y, z: 0.0), _field(lambda x, y, z: 0.0),
                              _field(lambda x, y, z: mu.map(y))])
    point = (2.0, 3.0, 1.0)
    adopted = vecops.curl_component(W, 0, point, mu, PAPER)
    literal = float(mu.density(point[0])) * fields.chen_partial(W.component(2), 1, point, mu)
    return ErratumItem(
        key='curl_row_prefactors',
        location='Hausdorff curl determinant',
        literal='every row carries mu x^(mu-1)',
        adopted='rows carry mu x^(mu-1), mu y^(mu-1), mu z^(mu-1)',
        witness=float(abs(adopted - literal)),
        vanishes_classically=True,
        expected=float(abs(mu.density(3.0) - mu.density(2.0))))


def _gradient_prefactors(mu):
    f = _field(lambda x, y, z: mu.map(x) + mu.map(y) + mu.map(z))
    point = (2.0, 3.0, 4.0)
    adopted = vecops.gradient(f, point, mu, PAPER)
    literal = vecops.gradient(f, point, mu, vecops.Convention.MAPPED_CONSISTENT)
    literal[0] = adopted[0]
    return ErratumItem(
        key='gradient_prefactors',
        location='Chen gradient in Cartesian coordinates',
        literal='only the x component carries its prefactor',
        adopted='each component carries mu x_i^(mu-1)',
        witness=float(np.max(np.abs(adopted - literal))),
        vanishes_classically=True)


def _theorem_pairing(key, location, entry, mu, quad):
    report = entry.run(mu, PAPER, quad)[0]
    return ErratumItem(
        key=key,
        location=location,
        literal='prefixed operators integrated against fractal measures',
        adopted='bare Chen partials, i.e. classical operators in mapped coordinates',
        witness=report.abs_residual,
        vanishes_classically=True)


def _transport(mu, quad):
    G = _field(lambda x, y, z: 1.0)
    upsilon = fields.VectorField3D([_field(lambda x, y, z: mu.map(x)), _field(lambda x, y, z: 0.0),
                                    _field(lambda x, y, z: 0.0)])
    box = fields.BoxDomain.from_mapped(suite.MAPPED_BOX, mu)
    report = flowpde.transport_identity_check(G, upsilon, box, mu, vecops.Convention.MAPPED_CONSISTENT, quad)
    return ErratumItem(
        key='transport_kernel_hypothesis',
        location='transport theorem kernel',
        literal='holds for any velocity',
        adopted='holds for divergence-free velocities',
        witness=report.abs_residual,
        vanishes_classically=False,
        expected=27.0)


def build_ledger(mu, quad=None, seed=0):
    """ Builds every ledger item with its witness at the given fractal dimension """

    mu = core.as_dimension(mu)
    samples = np.random.default_rng(seed).uniform(0.5, 1.5, size=10)
    items = [
        _stretched_exponential(mu, samples),
        _partials(mu),
        _laplacian(mu),
        _arc_length(mu),
        _curl_rows(mu),
        _gradient_prefactors(mu),
        _theorem_pairing('gauss_like_pairing', 'Gauss-like theorem', suite.GaussEntry(None, seed), mu, quad),
        _theorem_pairing('stokes_like_pairing', 'Stokes-like theorem', suite.StokesEntry(None, seed), mu, quad),
        _theorem_pairing('green_like_pairing', 'Green-like theorem', suite.GreenEntry(None, seed), mu, quad),
        _transport(mu, quad),
    ]
    for item in items:
        logger.debug('Erratum %s: witness %.6g', item.key, item.witness)
    return items
