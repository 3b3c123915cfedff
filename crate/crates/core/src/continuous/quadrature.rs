//! Legendre polynomials and Gauss–Legendre rules.

use std::f64::consts::PI;

/// `P_n(x)` by the three-term recurrence.
pub fn legendre(n: usize, x: f64) -> f64 {
    legendre_with_derivative(n, x).0
}

/// `[P_0(x), …, P_n(x)]`.
pub fn legendre_all(n: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    legendre_into(x, n, &mut out);
    out
}

/// Clears `out` and fills it with `P_0(x), …, P_n(x)`.
pub(crate) fn legendre_into(x: f64, n: usize, out: &mut Vec<f64>) {
    out.clear();
    out.push(1.0);
    if n == 0 {
        return;
    }
    out.push(x);
    for k in 1..n {
        let p = ((2 * k + 1) as f64 * x * out[k] - k as f64 * out[k - 1]) / (k + 1) as f64;
        out.push(p);
    }
}

/// `(P_n(x), P_n'(x))`; the derivative is only used at interior points.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let (mut p0, mut p1) = (1.0, x);
    for k in 1..n {
        let p2 = ((2 * k + 1) as f64 * x * p1 - k as f64 * p0) / (k + 1) as f64;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Gauss–Legendre rule with `q` nodes on `[-1, 1]`, nodes ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Nodes by Newton iteration from Chebyshev-like initial guesses.
    ///
    /// # Panics
    /// If `q == 0`.
    pub fn new(q: usize) -> Self {
        assert!(q > 0, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; q];
        let mut weights = vec![0.0; q];
        for i in 0..q.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (q as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(q, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(q, x);
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[q - 1 - i] = x;
            weights[i] = w;
            weights[q - 1 - i] = w;
        }
        if q % 2 == 1 {
            nodes[q / 2] = 0.0;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `∫_{-1}^{1} f`.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    /// `∫_a^b f` by the affine image of the rule.
    pub fn integrate_on(&self, a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
        let (half, mid) = ((b - a) / 2.0, (a + b) / 2.0);
        half * self.integrate(|x| f(mid + half * x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_matches_closed_forms() {
        for x in [-1.0, -0.3, 0.0, 0.5, 1.0] {
            assert_eq!(legendre(0, x), 1.0);
            assert_eq!(legendre(1, x), x);
            assert!((legendre(2, x) - (3.0 * x * x - 1.0) / 2.0).abs() < 1e-15);
            assert!((legendre(3, x) - (5.0 * x * x * x - 3.0 * x) / 2.0).abs() < 1e-15);
        }
        assert_eq!(legendre(7, 1.0), 1.0);
        assert_eq!(legendre(7, -1.0), -1.0);
        assert_eq!(legendre_all(4, 0.5)[2], -0.125);
    }

    #[test]
    fn rule_is_exact_for_degree_2q_minus_1() {
        for q in [1, 2, 5, 16, 64] {
            let gl = GaussLegendre::new(q);
            assert!(gl.weights.iter().all(|&w| w > 0.0));
            assert!((gl.weights.iter().sum::<f64>() - 2.0).abs() < 1e-13);
            assert!(gl.nodes.windows(2).all(|p| p[0] < p[1]));
            for d in 0..2 * q {
                let exact = if d % 2 == 1 { 0.0 } else { 2.0 / (d + 1) as f64 };
                let got = gl.integrate(|x| x.powi(d as i32));
                assert!((got - exact).abs() < 1e-13, "q={q} d={d}: {got}");
            }
        }
    }

    #[test]
    fn legendre_orthogonality() {
        let gl = GaussLegendre::new(64);
        for n in 0..=12 {
            for m in 0..=12 {
                let ip = gl.integrate(|x| legendre(n, x) * legendre(m, x));
                let exact = if n == m { 2.0 / (2 * n + 1) as f64 } else { 0.0 };
                assert!((ip - exact).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn affine_rule() {
        let gl = GaussLegendre::new(20);
        let v = gl.integrate_on(0.0, PI, f64::sin);
        assert!((v - 2.0).abs() < 1e-13);
    }
}
