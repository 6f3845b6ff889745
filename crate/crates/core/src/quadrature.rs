//! Composite Gauss-Legendre quadrature.

use num_traits::{Float, FloatConst};

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`,
/// by Newton iteration on `P_n` from the Chebyshev-like initial guesses.
pub fn gauss_legendre<F: Float + FloatConst>(n: usize) -> (Vec<F>, Vec<F>) {
    assert!(n >= 1);
    let nf = F::from(n).unwrap();
    let half = F::from(0.5).unwrap();
    let quarter3 = F::from(0.75).unwrap();
    let two = F::from(2.0).unwrap();
    let eps = F::epsilon() * F::from(4.0).unwrap();
    let mut nodes = vec![F::zero(); n];
    let mut weights = vec![F::zero(); n];
    for i in 0..n.div_ceil(2) {
        let mut x = (F::PI() * (F::from(i).unwrap() + quarter3) / (nf + half)).cos();
        let mut dp = F::one();
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x = x - dx;
            if dx.abs() <= eps {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != F::zero() {
            dp = d;
        }
        let w = two / ((F::one() - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre_with_derivative<F: Float>(n: usize, x: F) -> (F, F) {
    let mut p0 = F::one();
    let mut p1 = x;
    for j in 2..=n {
        let jf = F::from(j).unwrap();
        let p2 = ((F::from(2 * j - 1).unwrap()) * x * p1 - (jf - F::one()) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (F::one(), F::zero());
    }
    let nf = F::from(n).unwrap();
    let d = nf * (x * p1 - p0) / (x * x - F::one());
    (p1, d)
}

/// A rule reusable across integrands.
#[derive(Clone, Debug)]
pub struct CompositeGaussLegendre<F> {
    nodes: Vec<F>,
    weights: Vec<F>,
    panels: usize,
}

impl<F: Float + FloatConst> CompositeGaussLegendre<F> {
    pub fn new(points_per_panel: usize, panels: usize) -> Self {
        assert!(panels >= 1);
        let (nodes, weights) = gauss_legendre(points_per_panel);
        CompositeGaussLegendre {
            nodes,
            weights,
            panels,
        }
    }

    /// Integral of `f` over `[a, b]`, panels summed left to right.
    pub fn integrate(&self, a: F, b: F, f: impl Fn(F) -> F) -> F {
        let two = F::from(2.0).unwrap();
        let width = (b - a) / F::from(self.panels).unwrap();
        let mut total = F::zero();
        for p in 0..self.panels {
            let lo = a + width * F::from(p).unwrap();
            let mid = lo + width / two;
            let mut panel = F::zero();
            for (x, w) in self.nodes.iter().zip(&self.weights) {
                panel = panel + *w * f(mid + *x * width / two);
            }
            total = total + panel * width / two;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two() {
        for n in [1, 2, 5, 16, 64] {
            let (_, w) = gauss_legendre::<f64>(n);
            let s: f64 = w.iter().sum();
            assert!((s - 2.0).abs() < 1e-13, "n={n} sum={s}");
        }
    }

    #[test]
    fn known_three_point_rule() {
        let (x, w) = gauss_legendre::<f64>(3);
        assert!((x[2] - (0.6f64).sqrt()).abs() < 1e-15);
        assert!(x[1].abs() < 1e-15);
        assert!((w[1] - 8.0 / 9.0).abs() < 1e-15);
        assert!((w[0] - 5.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn exact_for_high_degree_polynomials() {
        let rule = CompositeGaussLegendre::<f64>::new(10, 1);
        // 10 points integrate degree 19 exactly.
        let got = rule.integrate(0.0, 1.0, |t| t.powi(19));
        assert!((got - 1.0 / 20.0).abs() < 1e-15);
    }

    #[test]
    fn composite_on_trig() {
        let rule = CompositeGaussLegendre::<f64>::new(64, 8);
        let got = rule.integrate(0.0, std::f64::consts::PI, f64::sin);
        assert!((got - 2.0).abs() < 1e-14);
        let rule32 = CompositeGaussLegendre::<f32>::new(16, 2);
        assert!((rule32.integrate(0.0, 1.0, |t| t * t) - 1.0 / 3.0).abs() < 1e-6);
    }
}
