//! Plain-text rendering of a [`Report`]: one `key = value` line per fact.

use std::fmt::Write;

use crate::report::{BoundJson, Report};

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "unknown".to_string(), T::to_string)
}

pub fn render(r: &Report) -> String {
    let mut out = String::new();
    let w = &mut out;
    if let Some(g) = &r.group {
        let _ = writeln!(w, "group = {}", g.label);
        let _ = writeln!(w, "order = {}", g.order);
        let _ = writeln!(w, "family = {}", g.family);
        let _ = writeln!(w, "abelian = {}, cyclic = {}, dedekind = {}", g.abelian, g.cyclic, opt(&g.dedekind));
        let _ = writeln!(w, "rank = {}", opt(&g.rank));
    }
    if let Some(q) = r.q {
        let _ = writeln!(w, "q = {q}");
    }
    if let Some(l) = &r.lattice {
        let _ = writeln!(w, "subgroups = {}", l.subgroup_count);
        let _ = writeln!(w, "r = {}, r_2 = {}, r_P = {}", l.r, l.r_2, l.r_p);
        let by_index: Vec<String> = l.r_by_index.iter().map(|c| format!("r_{} = {}", c.index, c.count)).collect();
        let _ = writeln!(w, "{}", by_index.join(", "));
        let _ = writeln!(w, "normal_subgroups = {}, length = {}, srank = {}", l.normal_count, l.length, opt(&l.srank));
        let _ = writeln!(w, "dedekind = {}", l.dedekind);
        for c in &l.classes {
            let _ = writeln!(
                w,
                "class {}: representative = {}, size = {}, order = {}, index = {}, normalizer_order = {}, normal = {}",
                c.class, c.representative, c.size, c.subgroup_order, c.index, c.normalizer_order, c.normal
            );
        }
        if let Some(subs) = &l.subgroups {
            for s in subs {
                let elems: Vec<String> = s.elements.iter().map(usize::to_string).collect();
                let _ = writeln!(
                    w,
                    "subgroup {}: order = {}, class = {}, normal = {}, elements = {{{}}}",
                    s.id,
                    s.order,
                    s.class,
                    s.normal,
                    elems.join(",")
                );
            }
        }
        if let Some(m) = &l.mobius {
            for (h, row) in m.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(i64::to_string).collect();
                let _ = writeln!(w, "mobius {h} = {}", cells.join(" "));
            }
        }
    }
    if let Some(a) = &r.alpha {
        for e in &a.entries {
            let _ = writeln!(
                w,
                "alpha[class {}] = {}  (index = {}, quotient_order = {})",
                e.class, e.alpha, e.index, e.quotient_order
            );
        }
        let _ = writeln!(w, "orbit_count = {}, burnside_count = {}", a.orbit_count, a.burnside_count);
    }
    if let Some(a) = &r.aut {
        let _ = writeln!(w, "aut_structure = {}", a.structure);
        let _ = writeln!(w, "aut_order = {}", a.order.as_deref().unwrap_or("too long to print"));
        let _ = writeln!(w, "aut_order_expression = {}", a.order_expression);
        let _ = writeln!(w, "aut_order_log2 = {}", a.order_log2);
        let _ = writeln!(w, "aut_rank = {}", opt(&a.rank));
    }
    if let Some(b) = &r.bounds {
        for row in &b.rows {
            let value = match &row.value {
                None => "n/a".to_string(),
                Some(BoundJson::Integer(v)) => v.to_string(),
                Some(BoundJson::Interval { lower, upper, .. }) => format!("[{lower}, {}]", opt(upper)),
                Some(BoundJson::Real { value, ceiling }) => format!("{value} (ceil {ceiling})"),
            };
            let _ = writeln!(w, "{} = {}  [{}]", row.name, value, row.provenance);
        }
        if let Some(c) = &b.chain {
            let _ = writeln!(w, "family = {}, depth = {}", c.family, c.depth);
            for row in &c.rows {
                let _ = writeln!(
                    w,
                    "depth {}: quotient = {}, order = {}, r = {}, r_2 = {}, normal_subgroups = {}, lower = {}",
                    row.depth, row.quotient, row.order, row.r, row.r_2, row.normal_count, row.lower
                );
            }
            let lowers: Vec<String> = c.rows.iter().map(|r| r.lower.to_string()).collect();
            let _ = writeln!(w, "lower_bounds = {}", lowers.join(","));
        }
    }
    if let Some(o) = &r.oracle {
        let _ = writeln!(w, "configurations = {}, endomorphisms = {}", o.configurations, o.endomorphism_count);
        let _ = writeln!(w, "census = {}, census_match = {}", o.census.join(","), o.census_match);
        let _ = writeln!(
            w,
            "aut_count = {}, structure_order = {}, verdict = {}",
            o.aut_count, o.structure_order, o.verdict
        );
    }
    out
}
