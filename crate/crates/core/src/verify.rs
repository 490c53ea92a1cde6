//! Exhaustive consistency checks at a fixed rank, grouped into suites.
//!
//! Each check reports a pass or the first counterexample found. The CLI
//! `verify` command is a thin wrapper around [`run_suite`].

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::matrix::IntMatrix;
use crate::mutation::{build_exchange_graph, zigzag_matrix, zigzag_summands, ExchangeMatrix};
use crate::polygon::{
    all_cs_pairs, crossing_points, delta, delta_inv, enumerate_triangulations, flip_graph,
    graphs_isomorphic_via_delta, triangulation_of,
};
use crate::rep::hom_dim_oracle;
use crate::rigid::{
    cluster_tilting_witness, complements, enumerate_maximal_rigid, enumerate_rigid_indecs,
    from_tilting_datum, to_tilting_datum, witness_holds,
};
use crate::tube::{ext_dim_cluster, hom_dim_cluster, hom_dim_tube, TubeObject, TubeRank};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Hom,
    Counts,
    Mutation,
    Polygon,
    NoClusterTilting,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::Hom, Suite::Counts, Suite::Mutation, Suite::Polygon, Suite::NoClusterTilting];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hom => "hom",
            Suite::Counts => "counts",
            Suite::Mutation => "mutation",
            Suite::Polygon => "polygon",
            Suite::NoClusterTilting => "no-ct",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub name: &'static str,
    /// `None` on success, otherwise the first counterexample.
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

type Check = core::result::Result<(), String>;

fn lift(e: Error) -> String {
    e.to_string()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn catalan(m: u64) -> u64 {
    binomial(2 * m, m) / (m + 1)
}

/// Cartan matrix of type `B_m` in the labelling where vertex 1 carries the
/// double bond: `a_12 = -2`, `a_21 = -1`, other neighbours `-1`.
pub fn type_b_cartan(m: usize) -> IntMatrix {
    let mut a = IntMatrix::zeros(m, m);
    for i in 0..m {
        a.set(i, i, 2);
        if i + 1 < m {
            a.set(i, i + 1, if i == 0 { -2 } else { -1 });
            a.set(i + 1, i, -1);
        }
    }
    a
}

/// Every indecomposable with quasi-length at most `max_len`.
fn objects_up_to(rank: TubeRank, max_len: u32) -> Vec<TubeObject> {
    (1..=rank.get())
        .flat_map(|a| (1..=max_len).map(move |b| (a, b)))
        .map(|(a, b)| TubeObject::new(rank, a, b).expect("in range"))
        .collect()
}

pub fn run_suite(rank: TubeRank, suite: Suite) -> Vec<CheckOutcome> {
    let checks: Vec<(&'static str, Check)> = match suite {
        Suite::Hom => hom_checks(rank),
        Suite::Counts => count_checks(rank),
        Suite::Mutation => mutation_checks(rank),
        Suite::Polygon => polygon_checks(rank),
        Suite::NoClusterTilting => no_ct_checks(rank),
    };
    checks.into_iter().map(|(name, r)| CheckOutcome { suite, name, counterexample: r.err() }).collect()
}

pub fn run_all(rank: TubeRank) -> Vec<CheckOutcome> {
    Suite::ALL.into_iter().flat_map(|s| run_suite(rank, s)).collect()
}

fn hom_checks(rank: TubeRank) -> Vec<(&'static str, Check)> {
    let n = rank.get();
    let objs = objects_up_to(rank, 2 * n);

    let oracle = || -> Check {
        for x in &objs {
            for y in &objs {
                let f = hom_dim_tube(x, y).map_err(lift)?;
                let o = hom_dim_oracle(x, y).map_err(lift)?;
                ensure(f == o, || format!("Hom{x}{y}: formula {f}, oracle {o}"))?;
            }
        }
        Ok(())
    };
    let symmetry = || -> Check {
        for x in &objs {
            for y in &objs {
                let (e1, e2) = (ext_dim_cluster(x, y).map_err(lift)?, ext_dim_cluster(y, x).map_err(lift)?);
                ensure(e1 == e2, || format!("Ext{x}{y} = {e1} but Ext{y}{x} = {e2}"))?;
            }
        }
        Ok(())
    };
    let boundary = || -> Check {
        for x in &objs {
            let e = ext_dim_cluster(x, x).map_err(lift)?;
            ensure((e == 0) == (x.b() < n), || format!("Ext{x}{x} = {e} at quasi-length {}", x.b()))?;
        }
        Ok(())
    };
    let cluster_contains_tube = || -> Check {
        for x in &objs {
            for y in &objs {
                let (c, t) = (hom_dim_cluster(x, y).map_err(lift)?, hom_dim_tube(x, y).map_err(lift)?);
                ensure(c >= t, || format!("Hom_C{x}{y} = {c} < Hom_T = {t}"))?;
            }
        }
        Ok(())
    };
    let hammock = || -> Check {
        let rigid = enumerate_rigid_indecs(rank);
        for b in 1..n {
            let x = TubeObject::new(rank, 1, b).map_err(lift)?;
            for y in &rigid {
                let (b, c, d, n) = (i64::from(b), i64::from(y.a()), i64::from(y.b()), i64::from(n));
                let cond_i = 1 < c && c < b + 2 && c + d > b + 1;
                let cond_ii = 1 < c + d + 1 - n && c + d + 1 - n < b + 2 && 1 < c && c < n + 1;
                let expected = u32::from(cond_i) + u32::from(cond_ii);
                let e = ext_dim_cluster(&x, y).map_err(lift)?;
                ensure(e == expected, || format!("Ext{x}{y} = {e}, hammock description gives {expected}"))?;
            }
        }
        Ok(())
    };

    alloc::vec![
        ("hom formula agrees with the representation oracle", oracle()),
        ("ext is symmetric", symmetry()),
        ("self-ext vanishes iff quasi-length <= n-1", boundary()),
        ("cluster hom contains tube hom", cluster_contains_tube()),
        ("ext matches the hammock description", hammock()),
    ]
}

fn count_checks(rank: TubeRank) -> Vec<(&'static str, Check)> {
    let n = u64::from(rank.get());
    let all = match enumerate_maximal_rigid(rank) {
        Ok(all) => all,
        Err(e) => return alloc::vec![("enumerate maximal rigid objects", Err(e.to_string()))],
    };

    let rigid_count = || -> Check {
        let c = enumerate_rigid_indecs(rank).len() as u64;
        ensure(c == n * (n - 1), || format!("{c} rigid indecomposables, expected {}", n * (n - 1)))
    };
    let maximal_count = || -> Check {
        let want = binomial(2 * n - 2, n - 1);
        ensure(all.len() as u64 == want, || format!("{} maximal rigid objects, expected {want}", all.len()))
    };
    let per_top = || -> Check {
        let want = catalan(n - 1);
        for s in 1..=rank.get() {
            let c = all.iter().filter(|t| t.top().map(|x| x.a()) == Ok(s)).count() as u64;
            ensure(c == want, || format!("{c} objects with top at {s}, expected {want}"))?;
        }
        Ok(())
    };
    let structure = || -> Check {
        for t in &all {
            t.check_structure().map_err(|e| format!("{t}: {e}"))?;
        }
        Ok(())
    };
    let tilting = || -> Check {
        for t in &all {
            let d = to_tilting_datum(t).map_err(lift)?;
            let back = from_tilting_datum(rank, &d).map_err(lift)?;
            ensure(&back == t, || format!("{t} round-trips to {back}"))?;
        }
        Ok(())
    };
    let unique_exchange = || -> Check {
        for t in &all {
            for (k, removed) in t.summands().iter().enumerate() {
                let (x, y) = complements(&t.without(k).map_err(lift)?)
                    .map_err(|e| format!("{t} without {removed}: {e}"))?;
                ensure(x != y && (x == *removed || y == *removed), || {
                    format!("{t} without {removed}: complements {x}, {y}")
                })?;
            }
        }
        Ok(())
    };
    let loops = || -> Check {
        for t in &all {
            let top = t.top().map_err(lift)?;
            let d = hom_dim_cluster(&top, &top).map_err(lift)?;
            ensure(d == 2, || format!("End({top}) has dimension {d} in {t}"))?;
        }
        Ok(())
    };

    alloc::vec![
        ("rigid indecomposables number n(n-1)", rigid_count()),
        ("maximal rigid objects number C(2n-2, n-1)", maximal_count()),
        ("each top carries Catalan(n-1) objects", per_top()),
        ("n-1 summands, unique top, wing containment", structure()),
        ("tilting datum round trip", tilting()),
        ("every summand has exactly two complements", unique_exchange()),
        ("top summand endomorphisms have dimension 2", loops()),
    ]
}

fn mutation_checks(rank: TubeRank) -> Vec<(&'static str, Check)> {
    let n = u64::from(rank.get());
    let m = rank.get() as usize - 1;

    let graph = match build_exchange_graph(rank) {
        Ok(g) => g,
        Err(e) => return alloc::vec![("matrix propagation is path independent", Err(e.to_string()))],
    };

    let initial = || -> Check {
        let zig = zigzag_summands(rank);
        let t = crate::rigid::MaximalRigid::new(rank, zig.clone()).map_err(lift)?;
        let b = graph.b_matrix(&t).map_err(lift)?.reindexed(&zig).map_err(lift)?;
        let printed = zigzag_matrix(rank);
        ensure(b.entries() == &printed, || format!("zig-zag matrix\n{}", b.entries()))?;
        let a = b.cartan_counterpart();
        ensure(a == type_b_cartan(m), || format!("Cartan counterpart\n{a}"))
    };
    let matrices = || -> Check {
        for s in graph.seeds() {
            let b: &ExchangeMatrix = s.matrix();
            ensure(b.order() == s.object().summands(), || format!("{}: labels out of order", s.object()))?;
            ensure(b.is_sign_skew_symmetric(), || format!("{}: not sign-skew-symmetric", s.object()))?;
            ensure((0..b.size()).all(|i| b.get(i, i) == 0), || format!("{}: nonzero diagonal", s.object()))?;
            ensure(b.max_abs_entry() <= 2, || format!("{}: entry {}", s.object(), b.max_abs_entry()))?;
        }
        Ok(())
    };
    let shape = || -> Check {
        let nodes = graph.node_count() as u64;
        let want = binomial(2 * n - 2, n - 1);
        ensure(nodes == want, || format!("{nodes} nodes, expected {want}"))?;
        ensure(graph.is_connected(), || "exchange graph is disconnected".to_string())?;
        for v in 0..graph.node_count() {
            let mut others: Vec<usize> = graph.neighbors(v).iter().map(|&(w, _)| w).collect();
            others.sort_unstable();
            others.dedup();
            ensure(others.len() == m && !others.contains(&v), || {
                format!("node {v} has degree {}", others.len())
            })?;
        }
        let edges = graph.edges().len() as u64;
        ensure(edges == nodes * (n - 1) / 2, || format!("{edges} edges for {nodes} nodes"))
    };
    let middle = || -> Check {
        for s in graph.seeds() {
            for i in 0..s.object().len() {
                let mt = s.middle_terms(i).map_err(lift)?;
                let own = s.object().summands()[i];
                ensure(mt.is_disjoint(), || format!("{}: middle terms of {own} overlap", s.object()))?;
                let supported =
                    mt.u.iter().chain(&mt.u_prime).all(|(x, _)| *x != own && s.object().contains(x));
                ensure(supported, || format!("{}: middle terms of {own} leave T/T_i", s.object()))?;
            }
        }
        Ok(())
    };
    let involution = || -> Check {
        for s in graph.seeds() {
            for k in 0..s.object().len() {
                let (next, slot) = s.mutate(k).map_err(lift)?;
                let (back, _) = next.mutate(slot).map_err(lift)?;
                ensure(&back == s, || format!("{}: mutating twice at {k} does not return", s.object()))?;
            }
        }
        Ok(())
    };

    alloc::vec![
        ("initial seed matches the type B matrix", initial()),
        ("matrix propagation is path independent", Ok(())),
        ("matrices are sign-skew-symmetric with entries in -2..=2", matrices()),
        ("exchange graph is connected and (n-1)-regular", shape()),
        ("middle terms are disjoint and supported on T/T_i", middle()),
        ("seed mutation is an involution", involution()),
    ]
}

fn polygon_checks(rank: TubeRank) -> Vec<(&'static str, Check)> {
    let rigid = enumerate_rigid_indecs(rank);

    let bijection = || -> Check {
        let mut images = rigid.iter().map(delta).collect::<crate::Result<Vec<_>>>().map_err(lift)?;
        for (x, p) in rigid.iter().zip(&images) {
            let back = delta_inv(p).map_err(lift)?;
            ensure(back == *x, || format!("delta_inv(delta{x}) = {back}"))?;
        }
        images.sort_unstable();
        images.dedup();
        ensure(images == all_cs_pairs(rank), || "delta is not onto the centrally symmetric pairs".to_string())
    };
    let crossing = || -> Check {
        for x in &rigid {
            for y in &rigid {
                let c = crossing_points(&delta(x).map_err(lift)?, &delta(y).map_err(lift)?);
                let e = ext_dim_cluster(x, y).map_err(lift)?;
                ensure(c == 2 * e, || format!("{x},{y}: {c} crossings, Ext dimension {e}"))?;
            }
        }
        Ok(())
    };
    let clusters = || -> Check {
        let all = enumerate_maximal_rigid(rank).map_err(lift)?;
        let mut images = all.iter().map(triangulation_of).collect::<crate::Result<Vec<_>>>().map_err(lift)?;
        images.sort();
        let tris = enumerate_triangulations(rank).map_err(lift)?;
        ensure(images == tris, || "triangulation_of is not a bijection".to_string())?;
        for t in &tris {
            let diameters = t.pairs().iter().filter(|p| p.is_degenerate()).count();
            ensure(diameters == 1, || format!("{t} has {diameters} diameters"))?;
        }
        Ok(())
    };
    let isomorphism = || -> Check {
        let eg = build_exchange_graph(rank).map_err(lift)?;
        let fg = flip_graph(rank).map_err(lift)?;
        ensure(graphs_isomorphic_via_delta(&eg, &fg).map_err(lift)?, || {
            "exchange graph and flip graph differ under delta".to_string()
        })
    };

    alloc::vec![
        ("delta is a bijection onto centrally symmetric pairs", bijection()),
        ("crossing points equal twice the Ext dimension", crossing()),
        ("maximal rigid objects map onto triangulations", clusters()),
        ("exchange graph is isomorphic to the flip graph", isomorphism()),
    ]
}

fn no_ct_checks(rank: TubeRank) -> Vec<(&'static str, Check)> {
    let witnesses = || -> Check {
        for t in enumerate_maximal_rigid(rank).map_err(lift)? {
            for k in [2, 3] {
                let y = cluster_tilting_witness(&t, k).map_err(lift)?;
                ensure(witness_holds(&t, &y).map_err(lift)?, || format!("{t}: witness {y} fails at k={k}"))?;
            }
        }
        Ok(())
    };
    alloc::vec![("no maximal rigid object is cluster-tilting", witnesses())]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting_helpers() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(10, 5), 252);
        assert_eq!(catalan(3), 5);
        assert_eq!(catalan(0), 1);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("all"), None);
    }

    #[test]
    fn everything_passes_at_rank_four() {
        let r = TubeRank::new(4).unwrap();
        for o in run_all(r) {
            assert!(o.passed(), "{}/{}: {:?}", o.suite, o.name, o.counterexample);
        }
    }
}
