//! Vertex decomposability (non-pure definition) with checkable certificates.
//!
//! A complex is vertex decomposable when it is a simplex or void, or has a
//! shedding vertex `v`: no facet of `lk(v)` is a facet of `Δ - v`, and both
//! `lk(v)` and `Δ - v` are vertex decomposable. Cone points and non-vertices
//! (singleton nonfaces) are stripped before every decision.

use std::collections::HashMap;

use serde::Serialize;

use super::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Cone points and ghost vertices removed.
pub fn reduce(c: &SimplicialComplex) -> SimplicialComplex {
    if c.is_void() {
        return SimplicialComplex::from_nonfaces(Vec::new(), &[Vec::new()]).expect("void");
    }
    let nonfaces = c.minimal_nonfaces();
    let keep: Vec<u32> = c
        .vertices()
        .iter()
        .copied()
        .filter(|v| nonfaces.iter().any(|n| n.len() > 1 && n.contains(v)))
        .collect();
    let kept: Vec<Vec<u32>> = nonfaces.into_iter().filter(|n| n.len() > 1).collect();
    SimplicialComplex::from_nonfaces(keep, &kept).expect("subset of vertices")
}

/// Relabels vertices by first occurrence in the sorted nonface list.
fn canonical_key(c: &SimplicialComplex) -> (usize, Vec<u128>) {
    let mut relabel: HashMap<usize, usize> = HashMap::new();
    let mut next = 0;
    let mut masks: Vec<u128> = Vec::new();
    for &m in c.nonface_masks() {
        let mut out = 0u128;
        for b in 0..128usize {
            if m >> b & 1 == 1 {
                let l = *relabel.entry(b).or_insert_with(|| {
                    next += 1;
                    next - 1
                });
                out |= 1u128 << l;
            }
        }
        masks.push(out);
    }
    masks.sort_unstable();
    (c.num_vertices(), masks)
}

fn is_shedding(c: &SimplicialComplex, v: u32, link: &SimplicialComplex, del: &SimplicialComplex) -> bool {
    let others: Vec<u32> = c.vertices().iter().copied().filter(|&u| u != v).collect();
    link.facets().iter().all(|f| {
        // f must extend inside the deletion
        others.iter().any(|u| {
            if f.contains(u) {
                return false;
            }
            let mut g = f.clone();
            g.push(*u);
            g.sort_unstable();
            del.is_face(&g)
        })
    })
}

/// One node of a certificate: a reduced complex and how it decomposes.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VdNode {
    pub vertices: Vec<u32>,
    pub nonfaces: Vec<Vec<u32>>,
    pub step: VdStep,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VdStep {
    Simplex,
    Void,
    Shed { vertex: u32, link: usize, deletion: usize },
}

/// Shared sub-decompositions make this a DAG; `root` is the node for the input.
#[derive(Clone, Debug, Serialize)]
pub struct VdCertificate {
    pub root: usize,
    pub nodes: Vec<VdNode>,
}

#[derive(Clone, Debug)]
pub struct VdOutcome {
    pub decomposable: bool,
    pub certificate: Option<VdCertificate>,
    /// A reduced subcomplex with no shedding vertex, when not decomposable.
    pub obstruction: Option<SimplicialComplex>,
}

#[derive(Default)]
struct Decider {
    /// Canonical key -> whether decomposable.
    memo: HashMap<(usize, Vec<u128>), bool>,
    obstruction: Option<SimplicialComplex>,
}

impl Decider {
    fn decide(&mut self, c: &SimplicialComplex) -> bool {
        let c = reduce(c);
        if c.is_void() || c.nonface_masks().is_empty() {
            return true;
        }
        let key = canonical_key(&c);
        if let Some(&r) = self.memo.get(&key) {
            return r;
        }
        let mut result = false;
        for &v in c.vertices().iter().rev() {
            let link = c.link(v).expect("vertex");
            let del = c.deletion(v).expect("vertex");
            if is_shedding(&c, v, &link, &del) && self.decide(&link) && self.decide(&del) {
                result = true;
                break;
            }
        }
        if !result && self.obstruction.is_none() {
            self.obstruction = Some(c.clone());
        }
        self.memo.insert(key, result);
        result
    }
}

struct Builder<'a> {
    decider: &'a mut Decider,
    nodes: Vec<VdNode>,
    index: HashMap<SimplicialComplex, usize>,
}

impl Builder<'_> {
    fn build(&mut self, c: &SimplicialComplex) -> usize {
        let c = reduce(c);
        if let Some(&i) = self.index.get(&c) {
            return i;
        }
        let step = if c.is_void() {
            VdStep::Void
        } else if c.nonface_masks().is_empty() {
            VdStep::Simplex
        } else {
            let mut chosen = None;
            for &v in c.vertices().iter().rev() {
                let link = c.link(v).expect("vertex");
                let del = c.deletion(v).expect("vertex");
                if is_shedding(&c, v, &link, &del) && self.decider.decide(&link) && self.decider.decide(&del) {
                    chosen = Some((v, link, del));
                    break;
                }
            }
            let (v, link, del) = chosen.expect("decided decomposable");
            let l = self.build(&link);
            let d = self.build(&del);
            VdStep::Shed {
                vertex: v,
                link: l,
                deletion: d,
            }
        };
        self.nodes.push(VdNode {
            vertices: c.vertices().to_vec(),
            nonfaces: c.minimal_nonfaces(),
            step,
        });
        let i = self.nodes.len() - 1;
        self.index.insert(c, i);
        i
    }
}

pub fn is_vertex_decomposable(c: &SimplicialComplex) -> VdOutcome {
    let mut decider = Decider::default();
    if !decider.decide(c) {
        return VdOutcome {
            decomposable: false,
            certificate: None,
            obstruction: decider.obstruction,
        };
    }
    let mut b = Builder {
        decider: &mut decider,
        nodes: Vec::new(),
        index: HashMap::new(),
    };
    let root = b.build(c);
    VdOutcome {
        decomposable: true,
        certificate: Some(VdCertificate { root, nodes: b.nodes }),
        obstruction: None,
    }
}

/// Re-checks every node of a certificate against `c`.
pub fn verify_vd_certificate(c: &SimplicialComplex, cert: &VdCertificate) -> Result<()> {
    let fail = |msg: String| Err(Error::InvalidParameters(msg));
    let node_complex = |i: usize| -> Result<SimplicialComplex> {
        let n = cert
            .nodes
            .get(i)
            .ok_or_else(|| Error::InvalidParameters(format!("node {i} missing")))?;
        SimplicialComplex::from_nonfaces(n.vertices.clone(), &n.nonfaces)
    };
    if node_complex(cert.root)? != reduce(c) {
        return fail("root node does not match the complex".into());
    }
    for (i, node) in cert.nodes.iter().enumerate() {
        let nc = node_complex(i)?;
        if nc != reduce(&nc) {
            return fail(format!("node {i} is not reduced"));
        }
        match node.step {
            VdStep::Simplex if nc.nonface_masks().is_empty() && !nc.is_void() => {}
            VdStep::Void if nc.is_void() => {}
            VdStep::Shed { vertex, link, deletion } => {
                if link >= i || deletion >= i {
                    return fail(format!("node {i} refers forward"));
                }
                let l = nc.link(vertex)?;
                let d = nc.deletion(vertex)?;
                if reduce(&l) != node_complex(link)? || reduce(&d) != node_complex(deletion)? {
                    return fail(format!("node {i}: children do not match link/deletion"));
                }
                if !is_shedding(&nc, vertex, &l, &d) {
                    return fail(format!("node {i}: vertex {vertex} is not shedding"));
                }
            }
            _ => return fail(format!("node {i}: step does not fit the complex")),
        }
    }
    Ok(())
}
