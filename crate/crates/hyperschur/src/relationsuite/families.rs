//! Relation families checked by the defining, derived, and appendix
//! suites.
//!
//! Every family is instantiated over all parameter values whose source
//! object stays within the configured strand budget
//! ([`SuiteConfig::max_degree`]).  Degenerate parameter values (zero
//! thicknesses at the boundary of a family's range) are absorbed by the
//! [`LayerBuilder`] elision rules, so each builder below states the
//! generic layer words only once.

use num_bigint::BigInt;

use super::{binomial, RelationCase, SuiteConfig};
use crate::hypercomb::SymmetryMode;
use crate::schurcat::OrbitMatrix;
use crate::webdsl::{reduced_cfd, AxisGen, Chain, DiagramExpr, HalfGen, Layer, LayerBuilder};

const MODE: SymmetryMode = SymmetryMode::Hyper;

fn layer(build: impl FnOnce(&mut LayerBuilder)) -> Layer {
    let mut builder = LayerBuilder::new(MODE);
    build(&mut builder);
    builder.build().expect("relation layer is well-formed")
}

fn chain(layers: Vec<Layer>) -> Chain {
    Chain::new(layers).expect("relation chain interfaces line up")
}

fn expr(layers: Vec<Layer>) -> DiagramExpr {
    DiagramExpr::from_chain(chain(layers))
}

fn terms(terms: Vec<(BigInt, Chain)>) -> DiagramExpr {
    DiagramExpr::from_terms(terms).expect("relation sides are non-empty")
}

fn case(
    family: &str,
    params: &[(&str, usize)],
    lhs: DiagramExpr,
    rhs: DiagramExpr,
) -> RelationCase {
    let mut name = family.to_string();
    for (k, v) in params {
        name.push_str(&format!(" {k}={v}"));
    }
    RelationCase {
        name,
        params: params
            .iter()
            .map(|(k, v)| (k.to_string(), *v as u64))
            .collect(),
        lhs,
        rhs,
    }
}

fn push_half(builder: &mut LayerBuilder, gen: HalfGen) {
    match gen {
        HalfGen::Id(a) => builder.push_id(a),
        HalfGen::Merge(a, b) => builder.push_merge(a, b),
        HalfGen::Split(a, b) => builder.push_split(a, b),
        HalfGen::Cross(a, b) => builder.push_cross(a, b),
    };
}

fn push_axis(builder: &mut LayerBuilder, gen: AxisGen) {
    match gen {
        AxisGen::Id(m) => builder.axis_id(m),
        AxisGen::Merge(a, m) => builder.axis_merge(a, m),
        AxisGen::Split(a, m) => builder.axis_split(a, m),
        AxisGen::Cross(a, m) => builder.axis_cross(a, m),
    };
}

fn push_ids(builder: &mut LayerBuilder, parts: &[usize]) {
    for &p in parts {
        builder.push_id(p);
    }
}

/// Identity wires matching the middle object `parts` (one or three parts).
fn pass_axis(builder: &mut LayerBuilder, parts: &[usize]) {
    match parts {
        [m] => {
            builder.axis_id(*m);
        }
        [a, m, _] => {
            builder.push_id(*a);
            builder.axis_id(*m);
        }
        _ => unreachable!("axis interfaces have one or three parts"),
    }
}

/// Merging in either order before a final merge gives the same morphism;
/// the axis form trades an outer merge against an axis absorption.
fn hsplitchoice(config: &SuiteConfig) -> Vec<RelationCase> {
    let half = config.max_degree / 2;
    let mut out = Vec::new();
    for a in 1..=half {
        for b in 1..=half {
            for c in 1..=half {
                if a + b + c > half {
                    continue;
                }
                let lhs = expr(vec![
                    layer(|l| {
                        l.push_merge(a, b).push_id(c);
                    }),
                    layer(|l| {
                        l.push_merge(a + b, c);
                    }),
                ]);
                let rhs = expr(vec![
                    layer(|l| {
                        l.push_id(a).push_merge(b, c);
                    }),
                    layer(|l| {
                        l.push_merge(a, b + c);
                    }),
                ]);
                out.push(case(
                    "hsplitchoice",
                    &[("a", a), ("b", b), ("c", c)],
                    lhs,
                    rhs,
                ));
            }
        }
    }
    for a in 1..=half {
        for b in 1..=half {
            for c in 0..=half {
                if a + b + c > half {
                    continue;
                }
                let lhs = expr(vec![
                    layer(|l| {
                        l.push_merge(a, b).axis_id(2 * c);
                    }),
                    layer(|l| {
                        l.axis_merge(a + b, 2 * c);
                    }),
                ]);
                let rhs = expr(vec![
                    layer(|l| {
                        l.push_id(a).axis_merge(b, 2 * c);
                    }),
                    layer(|l| {
                        l.axis_merge(a, 2 * b + 2 * c);
                    }),
                ]);
                out.push(case(
                    "hsplitchoice-axis",
                    &[("a", a), ("b", b), ("c", c)],
                    lhs,
                    rhs,
                ));
            }
        }
    }
    out
}

/// Splitting and immediately re-merging multiplies by a binomial count;
/// the axis form picks up an extra power of two per mirrored strand.
fn htrivial(config: &SuiteConfig) -> Vec<RelationCase> {
    let half = config.max_degree / 2;
    let mut out = Vec::new();
    for a in 1..=half {
        for b in 1..=half {
            if a + b > half {
                continue;
            }
            let lhs = expr(vec![
                layer(|l| {
                    l.push_split(a, b);
                }),
                layer(|l| {
                    l.push_merge(a, b);
                }),
            ]);
            let rhs = terms(vec![(
                binomial(a + b, a),
                chain(vec![layer(|l| {
                    l.push_id(a + b);
                })]),
            )]);
            out.push(case("htrivial", &[("a", a), ("b", b)], lhs, rhs));
        }
    }
    for a in 1..=half {
        for b in 0..=half {
            if a + b > half {
                continue;
            }
            let lhs = expr(vec![
                layer(|l| {
                    l.axis_split(a, 2 * b);
                }),
                layer(|l| {
                    l.axis_merge(a, 2 * b);
                }),
            ]);
            let coeff = BigInt::from(2u32).pow(a as u32) * binomial(a + b, a);
            let rhs = terms(vec![(
                coeff,
                chain(vec![layer(|l| {
                    l.axis_id(2 * a + 2 * b);
                })]),
            )]);
            out.push(case("htrivial-axis", &[("a", a), ("b", b)], lhs, rhs));
        }
    }
    out
}

/// A merge followed by a split expands as a sum over how much of each
/// incoming strand passes straight through versus crosses over.
fn hmergesplit(config: &SuiteConfig) -> Vec<RelationCase> {
    let half = config.max_degree / 2;
    let mut out = Vec::new();
    for a in 1..=half {
        for c in 1..=half {
            if a + c > half {
                continue;
            }
            for b in 1..(a + c) {
                let d = a + c - b;
                let mut rhs_terms = Vec::new();
                for s in 0..=a.min(b) {
                    let t_signed = s as isize + d as isize - a as isize;
                    if t_signed < 0 || t_signed as usize > c.min(d) {
                        continue;
                    }
                    let t = t_signed as usize;
                    rhs_terms.push((
                        BigInt::from(1),
                        chain(vec![
                            layer(|l| {
                                l.push_split(s, a - s).push_split(c - t, t);
                            }),
                            layer(|l| {
                                l.push_id(s).push_cross(a - s, c - t).push_id(t);
                            }),
                            layer(|l| {
                                l.push_merge(s, c - t).push_merge(a - s, t);
                            }),
                        ]),
                    ));
                }
                let lhs = expr(vec![
                    layer(|l| {
                        l.push_merge(a, c);
                    }),
                    layer(|l| {
                        l.push_split(b, d);
                    }),
                ]);
                out.push(case(
                    "hmergesplit",
                    &[("a", a), ("c", c), ("b", b), ("d", d)],
                    lhs,
                    terms(rhs_terms),
                ));
            }
        }
    }
    for a in 1..=half {
        for b in 0..=half {
            if a + b > half {
                continue;
            }
            let lhs = expr(vec![
                layer(|l| {
                    l.axis_merge(a, 2 * b);
                }),
                layer(|l| {
                    l.axis_split(a, 2 * b);
                }),
            ]);
            let lambda = lhs.source().clone();
            let mut rhs_terms = Vec::new();
            for s in 0..=a {
                for t in 0..=b.min(a - s) {
                    let rows = vec![
                        vec![s, t, a - s - t],
                        vec![t, 2 * b - 2 * t, t],
                        vec![a - s - t, t, s],
                    ];
                    let matrix = OrbitMatrix::new(rows, lambda.clone(), lambda.clone())
                        .expect("summand matrix is a valid basis index");
                    rhs_terms.push((BigInt::from(1), reduced_cfd(&matrix)));
                }
            }
            out.push(case(
                "hmergesplit-axis",
                &[("a", a), ("b", b)],
                lhs,
                terms(rhs_terms),
            ));
        }
    }
    out
}

/// Generators acting on disjoint strand groups slide past each other.
fn commute(config: &SuiteConfig) -> Vec<RelationCase> {
    let mut out = Vec::new();
    let gens = unit_half_gens(config);
    for (left_label, g1) in &gens {
        for (right_label, g2) in &gens {
            let weight: usize =
                g1.inputs().iter().sum::<usize>() + g2.inputs().iter().sum::<usize>();
            if 2 * weight > config.max_degree {
                continue;
            }
            let lhs = expr(vec![
                layer(|l| {
                    push_half(l, *g1);
                    push_ids(l, &g2.inputs());
                }),
                layer(|l| {
                    push_ids(l, &g1.outputs());
                    push_half(l, *g2);
                }),
            ]);
            let rhs = expr(vec![
                layer(|l| {
                    push_ids(l, &g1.inputs());
                    push_half(l, *g2);
                }),
                layer(|l| {
                    push_half(l, *g1);
                    push_ids(l, &g2.outputs());
                }),
            ]);
            out.push(case(
                &format!("commute {left_label}/{right_label}"),
                &[],
                lhs,
                rhs,
            ));
        }
    }
    out
}

/// Off-axis generators slide past axis generators further right.
fn hcommute(config: &SuiteConfig) -> Vec<RelationCase> {
    let mut out = Vec::new();
    for (left_label, g1) in &unit_half_gens(config) {
        for (axis_label, g2) in &small_axis_gens(config) {
            let weight: usize =
                2 * g1.inputs().iter().sum::<usize>() + g2.input_parts().iter().sum::<usize>();
            if weight > config.max_degree {
                continue;
            }
            let lhs = expr(vec![
                layer(|l| {
                    push_half(l, *g1);
                    pass_axis(l, &g2.input_parts());
                }),
                layer(|l| {
                    push_ids(l, &g1.outputs());
                    push_axis(l, *g2);
                }),
            ]);
            let rhs = expr(vec![
                layer(|l| {
                    push_ids(l, &g1.inputs());
                    push_axis(l, *g2);
                }),
                layer(|l| {
                    push_half(l, *g1);
                    pass_axis(l, &g2.output_parts());
                }),
            ]);
            out.push(case(
                &format!("hcommute {left_label}/{axis_label}"),
                &[],
                lhs,
                rhs,
            ));
        }
    }
    out
}

/// The three unit-thickness off-axis generators used as sliding
/// partners in the commutation families.
fn unit_half_gens(_config: &SuiteConfig) -> Vec<(String, HalfGen)> {
    vec![
        ("m(1,1)".to_string(), HalfGen::Merge(1, 1)),
        ("s(1,1)".to_string(), HalfGen::Split(1, 1)),
        ("x(1,1)".to_string(), HalfGen::Cross(1, 1)),
    ]
}

/// Axis generators small enough to pair with a unit off-axis generator
/// inside the strand budget: the unit generator occupies four strands,
/// leaving `max_degree - 4` for the axis generator's interface.
fn small_axis_gens(config: &SuiteConfig) -> Vec<(String, AxisGen)> {
    let budget = config.max_degree.saturating_sub(4);
    let mut out = Vec::new();
    for a in 1..=budget / 2 {
        for m in (0..=budget).step_by(2) {
            if 2 * a + m > budget {
                continue;
            }
            out.push((format!("M({a},{m})"), AxisGen::Merge(a, m)));
            out.push((format!("S({a},{m})"), AxisGen::Split(a, m)));
            out.push((format!("X({a},{m})"), AxisGen::Cross(a, m)));
        }
    }
    out
}

/// The crossing expands as a signed sum of merge/split ladders.
fn switch(config: &SuiteConfig) -> Vec<RelationCase> {
    let half = config.max_degree / 2;
    let mut out = Vec::new();
    for a in 1..=half {
        for b in 1..=half {
            if a + b > half {
                continue;
            }
            let lhs = expr(vec![layer(|l| {
                l.push_cross(a, b);
            })]);
            let mut rhs_terms = Vec::new();
            for t in 0..=a.min(b) {
                let sign = if t % 2 == 0 {
                    BigInt::from(1)
                } else {
                    BigInt::from(-1)
                };
                rhs_terms.push((
                    sign,
                    chain(vec![
                        layer(|l| {
                            l.push_split(t, a - t).push_id(b);
                        }),
                        layer(|l| {
                            l.push_id(t).push_merge(a - t, b);
                        }),
                        layer(|l| {
                            l.push_id(t).push_split(b - t, a);
                        }),
                        layer(|l| {
                            l.push_merge(t, b - t).push_id(a);
                        }),
                    ]),
                ));
            }
            out.push(case("switch", &[("a", a), ("b", b)], lhs, terms(rhs_terms)));
        }
    }
    out
}

/// Crossing and then merging is the same as merging directly.
fn swallows(config: &SuiteConfig) -> Vec<RelationCase> {
    let half = config.max_degree / 2;
    let mut out = Vec::new();
    for a in 1..=half {
        for b in 1..=half {
            if a + b > half {
                continue;
            }
            let lhs = expr(vec![
                layer(|l| {
                    l.push_cross(a, b);
                }),
                layer(|l| {
                    l.push_merge(b, a);
                }),
            ]);
            let rhs = expr(vec![layer(|l| {
                l.push_merge(a, b);
            })]);
            out.push(case("swallows", &[("a", a), ("b", b)], lhs, rhs));
        }
    }
    out
}

/// A split slides through a crossing one piece at a time.
fn sliders(config: &SuiteConfig) -> Vec<RelationCase> {
    let half = config.max_degree / 2;
    let mut out = Vec::new();
    for a in 1..=half {
        for b in 1..=half {
            for c in 1..=half {
                if a + b + c > half {
                    continue;
                }
                let lhs = expr(vec![
                    layer(|l| {
                        l.push_cross(b + c, a);
                    }),
                    layer(|l| {
                        l.push_id(a).push_split(b, c);
                    }),
                ]);
                let rhs = expr(vec![
                    layer(|l| {
                        l.push_split(b, c).push_id(a);
                    }),
                    layer(|l| {
                        l.push_id(b).push_cross(c, a);
                    }),
                    layer(|l| {
                        l.push_cross(b, a).push_id(c);
                    }),
                ]);
                out.push(case("sliders", &[("a", a), ("b", b), ("c", c)], lhs, rhs));
            }
        }
    }
    out
}

/// Two opposite crossings cancel.
fn symmetric(config: &SuiteConfig) -> Vec<RelationCase> {
    let half = config.max_degree / 2;
    let mut out = Vec::new();
    for a in 1..=half {
        for b in 1..=half {
            if a + b > half {
                continue;
            }
            let lhs = expr(vec![
                layer(|l| {
                    l.push_cross(a, b);
                }),
                layer(|l| {
                    l.push_cross(b, a);
                }),
            ]);
            let rhs = expr(vec![layer(|l| {
                l.push_id(a).push_id(b);
            })]);
            out.push(case("symmetric", &[("a", a), ("b", b)], lhs, rhs));
        }
    }
    out
}

/// The two ways of reversing three strands agree.
fn braid(config: &SuiteConfig) -> Vec<RelationCase> {
    let half = config.max_degree / 2;
    let mut out = Vec::new();
    for a in 1..=half {
        for b in 1..=half {
            for c in 1..=half {
                if a + b + c > half {
                    continue;
                }
                let lhs = expr(vec![
                    layer(|l| {
                        l.push_cross(a, b).push_id(c);
                    }),
                    layer(|l| {
                        l.push_id(b).push_cross(a, c);
                    }),
                    layer(|l| {
                        l.push_cross(b, c).push_id(a);
                    }),
                ]);
                let rhs = expr(vec![
                    layer(|l| {
                        l.push_id(a).push_cross(b, c);
                    }),
                    layer(|l| {
                        l.push_cross(a, c).push_id(b);
                    }),
                    layer(|l| {
                        l.push_id(c).push_cross(a, b);
                    }),
                ]);
                out.push(case("braid", &[("a", a), ("b", b), ("c", c)], lhs, rhs));
            }
        }
    }
    out
}

/// The axis crossing expands as a signed double sum of ladders that
/// detach a mirrored pair, cross it, and re-absorb it.
fn hthickcrossing(config: &SuiteConfig) -> Vec<RelationCase> {
    let half = config.max_degree / 2;
    let mut out = Vec::new();
    for a in 1..=half {
        for b in 0..=half {
            if a + b > half {
                continue;
            }
            let lhs = expr(vec![layer(|l| {
                l.axis_cross(a, 2 * b);
            })]);
            let mut rhs_terms = Vec::new();
            for u in 0..=a.min(b) {
                for t in 0..=(a - u) {
                    let sign = if (t + u) % 2 == 0 {
                        BigInt::from(1)
                    } else {
                        BigInt::from(-1)
                    };
                    rhs_terms.push((
                        sign,
                        chain(vec![
                            layer(|l| {
                                l.push_id(a).axis_split(u, 2 * b - 2 * u);
                            }),
                            layer(|l| {
                                l.push_cross(a, u).axis_id(2 * b - 2 * u);
                            }),
                            layer(|l| {
                                l.push_id(u).push_split(t, a - t).axis_id(2 * b - 2 * u);
                            }),
                            layer(|l| {
                                l.push_id(u).push_id(t).axis_merge(a - t, 2 * b - 2 * u);
                            }),
                            layer(|l| {
                                l.push_id(u).push_id(t).axis_split(a - u - t, 2 * b);
                            }),
                            layer(|l| {
                                l.push_id(u).push_merge(t, a - u - t).axis_id(2 * b);
                            }),
                            layer(|l| {
                                l.push_merge(u, a - u).axis_id(2 * b);
                            }),
                        ]),
                    ));
                }
            }
            out.push(case(
                "hthickcrossing",
                &[("a", a), ("b", b)],
                lhs,
                terms(rhs_terms),
            ));
        }
    }
    out
}

/// Crossing the axis and then absorbing is the same as absorbing.
fn hswallows(config: &SuiteConfig) -> Vec<RelationCase> {
    let half = config.max_degree / 2;
    let mut out = Vec::new();
    for a in 1..=half {
        for b in 0..=half {
            if a + b > half {
                continue;
            }
            let lhs = expr(vec![
                layer(|l| {
                    l.axis_cross(a, 2 * b);
                }),
                layer(|l| {
                    l.axis_merge(a, 2 * b);
                }),
            ]);
            let rhs = expr(vec![layer(|l| {
                l.axis_merge(a, 2 * b);
            })]);
            out.push(case("hswallows", &[("a", a), ("b", b)], lhs, rhs));
        }
    }
    out
}

/// An axis split slides through the axis crossing.
fn hmidsliders(config: &SuiteConfig) -> Vec<RelationCase> {
    let half = config.max_degree / 2;
    let mut out = Vec::new();
    for a in 1..=half {
        for b in 1..=half {
            for c in 0..=half {
                if a + b + c > half {
                    continue;
                }
                let lhs = expr(vec![
                    layer(|l| {
                        l.push_id(a).axis_split(b, 2 * c);
                    }),
                    layer(|l| {
                        l.push_cross(a, b).axis_id(2 * c);
                    }),
                    layer(|l| {
                        l.push_id(b).axis_cross(a, 2 * c);
                    }),
                    layer(|l| {
                        l.push_cross(b, a).axis_id(2 * c);
                    }),
                ]);
                let rhs = expr(vec![
                    layer(|l| {
                        l.axis_cross(a, 2 * b + 2 * c);
                    }),
                    layer(|l| {
                        l.push_id(a).axis_split(b, 2 * c);
                    }),
                ]);
                out.push(case(
                    "hmidsliders",
                    &[("a", a), ("b", b), ("c", c)],
                    lhs,
                    rhs,
                ));
            }
        }
    }
    out
}

/// An off-axis split slides off the axis crossing sideways.
fn hsidesliders(config: &SuiteConfig) -> Vec<RelationCase> {
    let half = config.max_degree / 2;
    let mut out = Vec::new();
    for a in 1..=half {
        for b in 1..=half {
            for c in 0..=half {
                if a + b + c > half {
                    continue;
                }
                let lhs = expr(vec![
                    layer(|l| {
                        l.push_split(b, a).axis_id(2 * c);
                    }),
                    layer(|l| {
                        l.push_id(b).axis_cross(a, 2 * c);
                    }),
                    layer(|l| {
                        l.push_cross(b, a).axis_id(2 * c);
                    }),
                    layer(|l| {
                        l.push_id(a).axis_cross(b, 2 * c);
                    }),
                ]);
                let rhs = expr(vec![
                    layer(|l| {
                        l.axis_cross(a + b, 2 * c);
                    }),
                    layer(|l| {
                        l.push_split(a, b).axis_id(2 * c);
                    }),
                ]);
                out.push(case(
                    "hsidesliders",
                    &[("a", a), ("b", b), ("c", c)],
                    lhs,
                    rhs,
                ));
            }
        }
    }
    out
}

/// Conjugating the axis crossing by an off-axis crossing cycles it.
fn hbraid(config: &SuiteConfig) -> Vec<RelationCase> {
    let half = config.max_degree / 2;
    let mut out = Vec::new();
    for a in 1..=half {
        for b in 1..=half {
            for c in 0..=half {
                if a + b + c > half {
                    continue;
                }
                let lhs = expr(vec![
                    layer(|l| {
                        l.push_id(a).axis_cross(b, 2 * c);
                    }),
                    layer(|l| {
                        l.push_cross(a, b).axis_id(2 * c);
                    }),
                    layer(|l| {
                        l.push_id(b).axis_cross(a, 2 * c);
                    }),
                    layer(|l| {
                        l.push_cross(b, a).axis_id(2 * c);
                    }),
                ]);
                let rhs = expr(vec![
                    layer(|l| {
                        l.push_cross(a, b).axis_id(2 * c);
                    }),
                    layer(|l| {
                        l.push_id(b).axis_cross(a, 2 * c);
                    }),
                    layer(|l| {
                        l.push_cross(b, a).axis_id(2 * c);
                    }),
                    layer(|l| {
                        l.push_id(a).axis_cross(b, 2 * c);
                    }),
                ]);
                out.push(case("hbraid", &[("a", a), ("b", b), ("c", c)], lhs, rhs));
            }
        }
    }
    out
}

/// A five-step axis crossing word retracts to three steps.
fn hsymmetric(config: &SuiteConfig) -> Vec<RelationCase> {
    let half = config.max_degree / 2;
    let mut out = Vec::new();
    for a in 1..=half {
        for b in 1..=half {
            for c in 0..=half {
                if a + b + c > half {
                    continue;
                }
                let lhs = expr(vec![
                    layer(|l| {
                        l.push_id(a).axis_cross(b, 2 * c);
                    }),
                    layer(|l| {
                        l.push_cross(a, b).axis_id(2 * c);
                    }),
                    layer(|l| {
                        l.push_id(b).axis_cross(a, 2 * c);
                    }),
                    layer(|l| {
                        l.push_cross(b, a).axis_id(2 * c);
                    }),
                    layer(|l| {
                        l.push_id(a).axis_cross(b, 2 * c);
                    }),
                ]);
                let rhs = expr(vec![
                    layer(|l| {
                        l.push_cross(a, b).axis_id(2 * c);
                    }),
                    layer(|l| {
                        l.push_id(b).axis_cross(a, 2 * c);
                    }),
                    layer(|l| {
                        l.push_cross(b, a).axis_id(2 * c);
                    }),
                ]);
                out.push(case(
                    "hsymmetric",
                    &[("a", a), ("b", b), ("c", c)],
                    lhs,
                    rhs,
                ));
            }
        }
    }
    out
}

/// Absorbing two mirrored pairs into the axis commutes up to an
/// off-axis crossing.
fn pullmerge(config: &SuiteConfig) -> Vec<RelationCase> {
    let half = config.max_degree / 2;
    let mut out = Vec::new();
    for a in 1..=half {
        for b in 1..=half {
            for c in 0..=half {
                if a + b + c > half {
                    continue;
                }
                let lhs = expr(vec![
                    layer(|l| {
                        l.push_id(a).axis_merge(b, 2 * c);
                    }),
                    layer(|l| {
                        l.axis_merge(a, 2 * b + 2 * c);
                    }),
                ]);
                let rhs = expr(vec![
                    layer(|l| {
                        l.push_cross(a, b).axis_id(2 * c);
                    }),
                    layer(|l| {
                        l.push_id(b).axis_merge(a, 2 * c);
                    }),
                    layer(|l| {
                        l.axis_merge(b, 2 * a + 2 * c);
                    }),
                ]);
                out.push(case("pullmerge", &[("a", a), ("b", b), ("c", c)], lhs, rhs));
            }
        }
    }
    out
}

/// The axis crossing is an involution.
fn hsimplesymmetric(config: &SuiteConfig) -> Vec<RelationCase> {
    let half = config.max_degree / 2;
    let mut out = Vec::new();
    for a in 1..=half {
        for b in 0..=half {
            if a + b > half {
                continue;
            }
            let lhs = expr(vec![
                layer(|l| {
                    l.axis_cross(a, 2 * b);
                }),
                layer(|l| {
                    l.axis_cross(a, 2 * b);
                }),
            ]);
            let rhs = expr(vec![layer(|l| {
                l.push_id(a).axis_id(2 * b);
            })]);
            out.push(case("hsimplesymmetric", &[("a", a), ("b", b)], lhs, rhs));
        }
    }
    out
}

/// Families forming the presentation of the category.
pub(super) fn defining_cases(config: &SuiteConfig) -> Vec<RelationCase> {
    let mut out = Vec::new();
    out.extend(hsplitchoice(config));
    out.extend(htrivial(config));
    out.extend(hmergesplit(config));
    out.extend(commute(config));
    out.extend(hcommute(config));
    out
}

/// Families provable from the defining set.
pub(super) fn derived_cases(config: &SuiteConfig) -> Vec<RelationCase> {
    let mut out = Vec::new();
    out.extend(switch(config));
    out.extend(swallows(config));
    out.extend(sliders(config));
    out.extend(symmetric(config));
    out.extend(braid(config));
    out.extend(hthickcrossing(config));
    out.extend(hswallows(config));
    out.extend(hmidsliders(config));
    out.extend(hsidesliders(config));
    out.extend(hbraid(config));
    out.extend(hsymmetric(config));
    out
}

/// Supplementary thick-strand families.
pub(super) fn appendix_cases(config: &SuiteConfig) -> Vec<RelationCase> {
    let mut out = Vec::new();
    out.extend(pullmerge(config));
    out.extend(hsimplesymmetric(config));
    out
}
