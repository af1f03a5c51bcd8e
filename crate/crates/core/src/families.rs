//! Closed-form perfect Italian domination numbers of named families, with
//! explicit optimal labelings, and the replicated-labeling bound for
//! Cartesian products.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{cartesian_product, FamilySpec, Graph, GraphError};
use crate::labeling::{is_valid, Labeling, LabelingError, Variant};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("no closed form for {0}; use the exact solver")]
    NoClosedForm(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error("factor labeling is not a valid perfect Italian labeling")]
    InvalidFactorLabeling,
}

/// A closed-form value together with the result it comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub value: usize,
    pub source: &'static str,
}

/// Shapes with a known closed form.
enum Shape {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    Multipartite(Vec<usize>),
    /// `P_2 □ P_n`; `transposed` when given as `P_n □ P_2`.
    LadderProduct { n: usize, transposed: bool },
    CliqueProduct { m: usize, n: usize },
}

fn classify(spec: &FamilySpec) -> Result<Shape, FamilyError> {
    spec.validate()?;
    use FamilySpec::*;
    Ok(match spec {
        Path(n) => Shape::Path(*n),
        Cycle(n) => Shape::Cycle(*n),
        Complete(n) => Shape::Complete(*n),
        Empty(n) => Shape::Empty(*n),
        Star(n) => Shape::Multipartite(vec![1, *n]),
        CompleteMultipartite(parts) => Shape::Multipartite(parts.clone()),
        CartesianProduct(g, h) => match (g.as_ref(), h.as_ref()) {
            (Path(2), Path(n)) => Shape::LadderProduct {
                n: *n,
                transposed: false,
            },
            (Path(n), Path(2)) => Shape::LadderProduct {
                n: *n,
                transposed: true,
            },
            (Complete(m), Complete(n)) => Shape::CliqueProduct { m: *m, n: *n },
            _ => return Err(FamilyError::NoClosedForm(spec.to_string())),
        },
    })
}

/// Closed-form perfect Italian domination number of `spec`.
///
/// Complete multipartite graphs dispatch in this order: one part (edgeless),
/// smallest part of size 1 or 2, two parts, three parts, otherwise `n`.
pub fn pid_formula(spec: &FamilySpec) -> Result<FormulaResult, FamilyError> {
    let r = |value, source| Ok(FormulaResult { value, source });
    match classify(spec)? {
        Shape::Path(n) => r((n + 2) / 2, "Thm 2.3"),
        Shape::Cycle(n) => r(n.div_ceil(2), "Thm 2.5"),
        Shape::Complete(1) => r(1, "K1 (Obs 3 needs m >= 2)"),
        Shape::Complete(_) => r(2, "Obs 3"),
        Shape::Empty(n) => r(n, "Obs 1"),
        Shape::Multipartite(parts) => {
            let n: usize = parts.iter().sum();
            match (parts.len(), parts[0]) {
                (1, _) => r(n, "Obs 1"),
                (_, 1 | 2) => r(2, "Thm 2.6"),
                (2, _) => r(4, "Obs 2"),
                (3, _) => r(3, "Thm 2.6"),
                _ => r(n, "Thm 2.6"),
            }
        }
        Shape::LadderProduct { n, .. } => match n {
            1 | 3 | 5 => r(n + 1, "Thm 4.3"),
            _ => r(n, "Thm 4.3"),
        },
        Shape::CliqueProduct { m, n } if m == n => r(n, "Thm 4.4"),
        Shape::CliqueProduct { m, n } => r(2 * m.min(n), "Thm 4.4"),
    }
}

/// An optimal perfect Italian labeling of `spec`, built from the explicit
/// pattern for its family, in the numbering used by [`crate::graph::generate`].
pub fn pid_witness(spec: &FamilySpec) -> Result<Labeling, FamilyError> {
    let values = match classify(spec)? {
        Shape::Path(n) => (0..n)
            .map(|i| u8::from(i % 2 == 0 || (n % 2 == 0 && i == n - 1)))
            .collect(),
        Shape::Cycle(n) => (0..n).map(|i| u8::from(i % 2 == 0)).collect(),
        Shape::Complete(1) | Shape::Empty(_) => vec![1; spec.order()],
        Shape::Complete(n) => {
            let mut f = vec![0; n];
            f[0] = 2;
            f
        }
        Shape::Multipartite(parts) => multipartite_witness(&parts),
        Shape::LadderProduct { n, transposed } => {
            let (u, v) = ladder_rows(n);
            if transposed {
                // P_n □ P_2: vertex (j, row) = 2j + row
                (0..n).flat_map(|j| [u[j], v[j]]).collect()
            } else {
                u.into_iter().chain(v).collect()
            }
        }
        Shape::CliqueProduct { m, n } => {
            // vertex (i, j) = i * n + j
            let mut f = vec![0; m * n];
            if m == n {
                for i in 0..n {
                    f[i * n + i] = 1;
                }
            } else if m < n {
                for i in 0..m {
                    f[i * n] = 2;
                }
            } else {
                f[..n].fill(2);
            }
            f
        }
    };
    Ok(Labeling::new(values)?)
}

fn multipartite_witness(parts: &[usize]) -> Vec<u8> {
    let n: usize = parts.iter().sum();
    let starts: Vec<usize> = parts
        .iter()
        .scan(0, |acc, &s| {
            let start = *acc;
            *acc += s;
            Some(start)
        })
        .collect();
    let mut f = vec![0; n];
    match (parts.len(), parts[0]) {
        (1, _) => f.fill(1),
        (_, 1) => f[0] = 2,
        (_, 2) => f[..2].fill(1),
        (2, _) => {
            for &s in &starts {
                f[s] = 1;
                f[s + 1] = 1;
            }
        }
        (3, _) => {
            for &s in &starts {
                f[s] = 1;
            }
        }
        _ => f.fill(1),
    }
    f
}

/// Rows `(u, v)` of an optimal labeling of `P_2 □ P_n`, column `j` holding
/// the labels of `u_{j+1}` and `v_{j+1}`.
fn ladder_rows(n: usize) -> (Vec<u8>, Vec<u8>) {
    let mut u = vec![0u8; n];
    let mut v = vec![0u8; n];
    match n {
        1 => {
            u[0] = 1;
            v[0] = 1;
        }
        3 => {
            v[2] = 2;
            u[0] = 1;
            v[1] = 1;
        }
        5 => {
            u[4] = 2;
            for j in [0, 3] {
                u[j] = 1;
            }
            for j in [1, 2] {
                v[j] = 1;
            }
        }
        _ if n.is_multiple_of(2) => fill_period_four(&mut u, &mut v),
        7 => {
            for j in 1..=n {
                if j % 6 == 4 {
                    u[j - 1] = 2;
                } else if j % 6 == 1 {
                    u[j - 1] = 1;
                }
                if j % 2 == 0 {
                    v[j - 1] = 1;
                }
            }
        }
        _ => {
            // Odd n >= 9. The period-six pattern used for n = 7 does not
            // extend: interior columns j ≡ 1 (mod 6) overshoot to sum 3.
            // Use the period-four pattern on the first n - 5 columns and close
            // with a fixed weight-5 tail.
            let prefix = n - 5;
            fill_period_four(&mut u[..prefix], &mut v[..prefix]);
            let (a, b): ([u8; 5], [u8; 5]) = ([0, 1, 0, 1, 0], [0, 2, 0, 0, 1]);
            let (tu, tv) = if prefix.is_multiple_of(4) { (a, b) } else { (b, a) };
            u[prefix..].copy_from_slice(&tu);
            v[prefix..].copy_from_slice(&tv);
        }
    }
    (u, v)
}

/// `u_j = 1` for `j ≡ 0,1 (mod 4)`, `v_j = 1` for `j ≡ 2,3 (mod 4)`, 1-based.
fn fill_period_four(u: &mut [u8], v: &mut [u8]) {
    for j in 1..=u.len() {
        let top = matches!(j % 4, 0 | 1);
        u[j - 1] = u8::from(top);
        v[j - 1] = u8::from(!top);
    }
}

/// Which factor's labeling was copied across the product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Factor {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductBound {
    pub bound: usize,
    pub witness: Labeling,
    pub replicated: Factor,
}

/// Upper bound on `γ_I^p(g □ h)` from optimal labelings of the factors.
///
/// `g_opt` and `h_opt` are perfect Italian labelings of `g` and `h`; their
/// weights play the role of the factors' domination numbers. The bound is
/// `min(|V(h)|·w(g_opt), |V(g)|·w(h_opt))`, witnessed by copying the cheaper
/// side's labeling onto every fiber.
pub fn product_upper_bound(
    g: &Graph,
    g_opt: &Labeling,
    h: &Graph,
    h_opt: &Labeling,
) -> Result<ProductBound, FamilyError> {
    if !is_valid(g, g_opt, Variant::PerfectItalian)? || !is_valid(h, h_opt, Variant::PerfectItalian)? {
        return Err(FamilyError::InvalidFactorLabeling);
    }
    let (gn, hn) = (g.n(), h.n());
    let via_g = hn * g_opt.weight();
    let via_h = gn * h_opt.weight();
    let (bound, replicated) = if via_g <= via_h {
        (via_g, Factor::Left)
    } else {
        (via_h, Factor::Right)
    };
    let values = (0..gn)
        .flat_map(|u| {
            (0..hn).map(move |v| match replicated {
                Factor::Left => g_opt.get(u),
                Factor::Right => h_opt.get(v),
            })
        })
        .collect();
    let witness = Labeling::new(values)?;
    debug_assert!(is_valid(&cartesian_product(g, h), &witness, Variant::PerfectItalian).unwrap_or(false));
    Ok(ProductBound {
        bound,
        witness,
        replicated,
    })
}

/// `γ_I(P_2 □ P_n) = n`, a known external value used as a cross-check.
pub fn italian_formula_p2pn(n: usize) -> usize {
    n
}
