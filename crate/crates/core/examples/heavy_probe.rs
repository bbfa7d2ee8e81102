// Timing probe for the two heaviest eliminations. Not part of the test
// suite; run with `cargo run --release -p algeo-core --example heavy_probe`.

use algeo_core::ideal::Ideal;
use algeo_core::matrix::{jacobian, PolyMatrix};
use algeo_core::monomial::MonomialOrder;
use algeo_core::poly::{parse_polynomial, Polynomial};
use algeo_core::ring::Ring;
use algeo_core::scalar::Domain;
use std::time::Instant;

fn main() {
    let which = std::env::args().nth(1).unwrap_or_else(|| "both".into());

    if which == "singular" || which == "both" {
        let t0 = Instant::now();
        let vars: Vec<String> = ["x", "y", "z"]
            .iter()
            .map(|s| s.to_string())
            .chain(('a'..='j').map(|c| c.to_string()))
            .collect();
        let s = Ring::new(Domain::Rational, vars, MonomialOrder::Eliminate(2)).unwrap();
        let f = parse_polynomial(
            &s,
            "a*x^3+b*x^2*y+c*x^2*z+d*x*y^2+e*x*y*z+f*x*z^2+g*y^3+h*y^2*z+i*y*z^2+j*z^3",
        )
        .unwrap();
        let jac = jacobian(&s, &[f.clone()]).unwrap();
        let partials: Vec<Polynomial> = (0..3).map(|i| jac.entry(i, 0).clone()).collect();

        // determinantal route first (cheap)
        let hessian = jacobian(&s, &partials)
            .unwrap()
            .submatrix(&[0, 1, 2], &[0, 1, 2])
            .unwrap()
            .det()
            .unwrap();
        let hess_partials: Vec<Polynomial> =
            (0..3).map(|i| hessian.partial_derivative(i).unwrap()).collect();
        let coeff_matrix = |polys: &[Polynomial]| -> PolyMatrix {
            let mut monos: Vec<algeo_core::monomial::Monomial> = Vec::new();
            let mut rows: Vec<Vec<(algeo_core::monomial::Monomial, Polynomial)>> = Vec::new();
            for p in polys {
                let parts = p.coefficients_in(&[0, 1, 2]).unwrap();
                for (m, _) in &parts {
                    if !monos.contains(m) {
                        monos.push(m.clone());
                    }
                }
                rows.push(parts);
            }
            monos.sort_by(|a, b| {
                algeo_core::monomial::cmp_monomials(b, a, s.order())
            });
            let entries: Vec<Polynomial> = rows
                .iter()
                .map(|parts| {
                    monos
                        .iter()
                        .map(|m| {
                            parts
                                .iter()
                                .find(|(pm, _)| pm == m)
                                .map(|(_, c)| c.clone())
                                .unwrap_or_else(|| Polynomial::zero(&s))
                        })
                        .collect::<Vec<_>>()
                })
                .flatten()
                .collect();
            PolyMatrix::new(&s, polys.len(), monos.len(), entries).unwrap()
        };
        let a = coeff_matrix(&partials);
        let b = coeff_matrix(&hess_partials);
        let stacked = a.concat_v(&b).unwrap();
        let det_discr = stacked.det().unwrap();
        println!(
            "singular: det route {} terms in {:?}",
            det_discr.n_terms(),
            t0.elapsed()
        );

        let t1 = Instant::now();
        let mut gens = partials.clone();
        gens.push(f);
        let singularities = Ideal::new(&s, gens).unwrap();
        let elim = singularities.eliminate(2).unwrap();
        println!(
            "singular: elimination gave {} gens in {:?}",
            elim.gens().len(),
            t1.elapsed()
        );
        let t2 = Instant::now();
        let mut assign = std::collections::HashMap::new();
        assign.insert(2usize, Polynomial::one(&s));
        let elim_gens: Vec<Polynomial> = elim
            .gens()
            .iter()
            .map(|g| g.substitute(&s, &assign).unwrap())
            .collect();
        let elim_discr = Ideal::new(&s, elim_gens).unwrap();
        let det_ideal = Ideal::new(&s, vec![det_discr]).unwrap();
        println!(
            "singular: equality {} in {:?}",
            elim_discr.equals(&det_ideal).unwrap(),
            t2.elapsed()
        );
    }

    if which == "irred" || which == "both" {
        let t0 = Instant::now();
        let mut vars: Vec<String> = vec!["t".into()];
        vars.extend((0..9).map(|i| format!("y_{i}")));
        vars.extend(('a'..='i').map(|c| c.to_string()));
        let s = Ring::new(Domain::Rational, vars, MonomialOrder::Eliminate(10)).unwrap();
        let n2 = PolyMatrix::from_rows(
            &s,
            vec![
                vec![
                    Polynomial::from_i64(&s, 0),
                    Polynomial::from_i64(&s, 1),
                    Polynomial::from_i64(&s, 0),
                ],
                vec![
                    Polynomial::from_i64(&s, 0),
                    Polynomial::from_i64(&s, 0),
                    Polynomial::from_i64(&s, 1),
                ],
                vec![
                    Polynomial::from_i64(&s, 0),
                    Polynomial::from_i64(&s, 0),
                    Polynomial::from_i64(&s, 0),
                ],
            ],
        )
        .unwrap();
        let g = PolyMatrix::generic(&s, 1, 3, 3).unwrap();
        let numerators = g.mul(&n2).unwrap().mul(&g.adjoint().unwrap()).unwrap();
        let d = g.det().unwrap();
        let m = PolyMatrix::generic(&s, 10, 3, 3).unwrap();
        let lhs = PolyMatrix::identity(&s, 3)
            .unwrap()
            .scalar_mul(&d)
            .unwrap()
            .mul(&m)
            .unwrap()
            .sub(&numerators)
            .unwrap();
        let mut gens: Vec<Polynomial> = lhs.entries().to_vec();
        let t_var = Polynomial::variable(&s, 0).unwrap();
        gens.push(
            Polynomial::one(&s)
                .sub(&d.mul(&t_var).unwrap())
                .unwrap(),
        );
        let elim_ideal = Ideal::new(&s, gens).unwrap();
        println!("irred: built inputs in {:?}", t0.elapsed());
        let t1 = Instant::now();
        let closure = elim_ideal.eliminate(10).unwrap();
        println!(
            "irred: elimination gave {} gens in {:?}",
            closure.gens().len(),
            t1.elapsed()
        );
        for g in closure.gens().iter().take(5) {
            println!("  gen with {} terms, degree {:?}", g.n_terms(), g.total_degree());
        }
    }
}
