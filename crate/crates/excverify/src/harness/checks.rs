use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cayley::{self, Octonion};
use crate::e8::{self, AutomorphismMode, BracketRows, E8Space};
use crate::exactfield::{CycNum, SVec, SemilinearOp, SpanSolver};
use crate::freudenthal::{self, MembershipMode};
use crate::jordan::{self, JordanElem};
use crate::liealg::{e1_stabilizer_sigma_prime_dim, pair_commutes_ad, AlgebraId, LieBasis, Representation};
use crate::words::{self, Level};

use super::expected::{expected_data, Table1Row};
use super::{CheckKind, CheckSpec, Context, Expected, Outcome, Provenance, Suite};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Dim,
    Center,
    Derived,
    Killing,
    Types,
    Commute,
    Involutive,
}

#[derive(Debug, Clone)]
pub enum Task {
    BasisDim(AlgebraId),
    Closure(AlgebraId),
    RealForm(AlgebraId),
    JacobiTable(AlgebraId),
    RowLabels,
    DualRoute,
    Antisymmetry,
    JacobiOperator,
    OctAlternative,
    TrilinearSymmetry,
    FixedDim { alg: AlgebraId, words: Vec<String> },
    Involutive { alg: AlgebraId, word: String },
    Table1(Box<Table1Row>, Part),
    E1Stabilizer,
    Identity { level: Level, lhs: String, rhs: String },
    FixesE1 { word: String },
    Membership { group: AlgebraId, word: String },
    EqualDims { alg: AlgebraId, a: String, b: String },
}

/// Triple counts for the property checks.
pub const ALTERNATIVE_TRIPLES: usize = 500;
pub const TRILINEAR_TRIPLES: usize = 200;
pub const ANTISYMMETRY_PAIRS: usize = 200;
pub const JACOBI_TRIPLES: usize = 200;

fn spec(id: String, kind: CheckKind, inputs: Vec<String>, value: Value, provenance: Provenance, note: &str) -> CheckSpec {
    CheckSpec { id, kind, inputs, expected: Expected { value, provenance, note: note.to_string() } }
}

fn alg(name: &str) -> AlgebraId {
    AlgebraId::parse(name).expect("known algebra in expected data")
}

pub fn catalogue(suite: Suite) -> Vec<(CheckSpec, Task)> {
    match suite {
        Suite::Bases => bases(),
        Suite::Table1 => table1(),
        Suite::Table2 => table2(),
        Suite::Lemmas => lemmas(),
        Suite::Identities => identities(),
        Suite::All => [bases(), table1(), table2(), lemmas(), identities()].concat(),
    }
}

fn bases() -> Vec<(CheckSpec, Task)> {
    use CheckKind::*;
    use Provenance::*;
    let mut out = Vec::new();
    for row in &expected_data().bases {
        let id = alg(&row.algebra);
        let p = |s: &str| format!("bases/{id}/{s}");
        let inp = vec![id.name().to_string()];
        out.push((spec(p("dim"), BasisDim, inp.clone(), json!(row.dim), row.provenance, &row.note), Task::BasisDim(id)));
        out.push((
            spec(p("closure"), Invariant, inp.clone(), json!(true), Trivial, "brackets of basis vectors are real combinations of basis vectors"),
            Task::Closure(id),
        ));
        out.push((
            spec(p("real-form"), Invariant, inp.clone(), json!(true), Trivial, "basis fixed by an involutive conjugation that respects the bracket"),
            Task::RealForm(id),
        ));
        out.push((spec(p("jacobi"), Jacobi, inp, json!(true), Trivial, "Jacobi identity on all basis triples"), Task::JacobiTable(id)));
    }
    let e8 = vec!["e8".to_string()];
    out.push((
        spec(
            "bases/e8/bracket-rows".into(),
            Jacobi,
            vec!["standard".into(), "literal".into()],
            json!({"standard": true, "literal": false}),
            Derived,
            "Jacobi on sampled basis triples: the P-input row must land in the P slot",
        ),
        Task::RowLabels,
    ));
    out.push((
        spec("bases/e8/dual-route".into(), Identity, e8.clone(), json!(true), Trivial, "operator-route bracket equals table-route bracket"),
        Task::DualRoute,
    ));
    out.push((
        spec("properties/e8/antisymmetry".into(), Invariant, e8.clone(), json!(true), Trivial, "[R1, R2] = -[R2, R1]"),
        Task::Antisymmetry,
    ));
    out.push((
        spec("properties/e8/jacobi-operator".into(), Jacobi, e8, json!(true), Trivial, "Jacobi on structured triples, operator route"),
        Task::JacobiOperator,
    ));
    out.push((
        spec("properties/oct/alternative-moufang".into(), Invariant, vec!["oct".into()], json!(true), Trivial, "(xx)y = x(xy), (yx)x = y(xx), z(x(zy)) = ((zx)z)y"),
        Task::OctAlternative,
    ));
    out.push((
        spec("properties/jordan/trilinear-symmetry".into(), Invariant, vec!["jordan".into()], json!(true), Trivial, "(X, Y x Z) is symmetric"),
        Task::TrilinearSymmetry,
    ));
    out
}

fn table1() -> Vec<(CheckSpec, Task)> {
    use CheckKind::*;
    use Provenance::*;
    let mut out = Vec::new();
    for row in &expected_data().table1 {
        let p = |s: &str| format!("table1/{}/{s}", row.row);
        let inp = vec![row.algebra.clone(), row.sigma.clone(), row.tau.clone()];
        let t = |part| Task::Table1(Box::new(row.clone()), part);
        let mut sorted = row.type_dims.clone();
        sorted.sort_unstable();
        out.push((spec(p("dim_k"), FixedDim, inp.clone(), json!(row.dim), row.provenance, &row.note), t(Part::Dim)));
        out.push((spec(p("center"), Invariant, inp.clone(), json!(row.center), Derived, &format!("center of {}", row.k)), t(Part::Center)));
        out.push((spec(p("derived"), Invariant, inp.clone(), json!(row.derived), Derived, &format!("derived algebra of {}", row.k)), t(Part::Derived)));
        out.push((
            spec(p("killing"), Invariant, inp.clone(), json!(true), Derived, "compact: Killing form negative semidefinite with radical = center"),
            t(Part::Killing),
        ));
        out.push((
            spec(p("types"), FixedDim, inp.clone(), json!(sorted), row.provenance, &format!("dims of g^sigma, g^tau, g^sigma.tau for types {}", row.types.join(", "))),
            t(Part::Types),
        ));
        out.push((spec(p("commute"), Invariant, inp.clone(), json!(true), Reference, "the pair commutes as automorphisms"), t(Part::Commute)));
        out.push((spec(p("involutive"), Invariant, inp, json!([true, true]), Reference, "both maps are involutions of the algebra"), t(Part::Involutive)));
    }
    out
}

fn table2() -> Vec<(CheckSpec, Task)> {
    use CheckKind::*;
    let mut out = Vec::new();
    for row in &expected_data().table2 {
        let a = alg(&row.algebra);
        let p = |s: &str| format!("table2/{}/{s}", row.row);
        let inp = vec![row.algebra.clone(), row.map.clone()];
        out.push((
            spec(p("dim"), FixedDim, inp.clone(), json!(row.dim), row.provenance, &row.note),
            Task::FixedDim { alg: a, words: vec![row.map.clone()] },
        ));
        out.push((
            spec(p("involutive"), Invariant, inp, json!(true), Provenance::Reference, "the map is an involution of the algebra"),
            Task::Involutive { alg: a, word: row.map.clone() },
        ));
    }
    out
}

fn lemmas() -> Vec<(CheckSpec, Task)> {
    use CheckKind::*;
    let mut out = Vec::new();
    for l in &expected_data().lemmas {
        let a = alg(&l.algebra);
        let task = if l.id == "e6-e1-stabilizer-sigma_prime" {
            Task::E1Stabilizer
        } else {
            Task::FixedDim { alg: a, words: l.maps.clone() }
        };
        let mut inp = vec![l.algebra.clone()];
        inp.extend(l.maps.iter().cloned());
        out.push((spec(format!("lemmas/{}", l.id), FixedDim, inp, json!(l.dim), l.provenance, &l.note), task));
    }
    let note = "equal fixed dimensions only: no conjugating element is constructed, so this is evidence, not a conjugacy proof";
    for (a, b) in [
        ("sigma", "lambda_omega gamma"),
        ("upsilon", "upsilon sigma"),
        ("upsilon", "iota_omega"),
        ("iota_omega", "upsilon_iota_omega"),
    ] {
        out.push((
            spec(
                format!("evidence/e8/{}~{}", a.replace(' ', "."), b.replace(' ', ".")),
                Invariant,
                vec!["e8".into(), a.into(), b.into()],
                json!(true),
                Provenance::Derived,
                note,
            ),
            Task::EqualDims { alg: AlgebraId::E8, a: a.into(), b: b.into() },
        ));
    }
    out
}

fn identity(id: &str, level: Level, lhs: &str, rhs: &str, prov: Provenance, note: &str) -> (CheckSpec, Task) {
    (
        spec(format!("identities/{id}"), CheckKind::Identity, vec![level.name().into(), lhs.into(), rhs.into()], json!(true), prov, note),
        Task::Identity { level, lhs: lhs.into(), rhs: rhs.into() },
    )
}

fn identities() -> Vec<(CheckSpec, Task)> {
    use Level::*;
    use Provenance::*;
    let conj = "conjugating element";
    let mut out = vec![
        identity("g2/delta1-gamma", Oct, "delta1 gamma", "gamma_H delta1", Reference, conj),
        identity("g2/delta2-gamma", Oct, "delta2 gamma", "gamma gamma_H delta2", Reference, conj),
        identity("g2/delta3-gamma", Oct, "delta3 gamma", "gamma_C delta3", Reference, conj),
        identity("g2/delta4-gamma", Oct, "delta4 gamma", "gamma gamma_C delta4", Reference, conj),
        identity("g2/delta1-square", Oct, "delta1^2", "1", Reference, "involution"),
        identity("g2/delta2-square", Oct, "delta2^2", "1", Reference, "involution"),
        identity("g2/delta3-square", Oct, "delta3^2", "1", Reference, "involution"),
        identity("g2/delta4-square", Oct, "delta4^2", "1", Reference, "involution"),
        identity("g2/gamma-gamma_H", Oct, "gamma gamma_H", "gamma_H gamma", Reference, "commuting pair"),
        identity("g2/gamma-gamma_C", Oct, "gamma gamma_C", "gamma_C gamma", Reference, "commuting pair"),
        identity("g2/gamma_H-gamma_C", Oct, "gamma_H gamma_C", "gamma_C gamma_H", Reference, "commuting pair"),
        identity("g2/w-cube", Oct, "w^3", "1", Reference, "w has order 3"),
        identity("f4/delta5-gamma", Jordan, "delta5 gamma", "gamma sigma delta5", Reference, conj),
        identity("f4/delta6-sigma", Jordan, "delta6 sigma", "sigma_prime delta6", Reference, conj),
        identity("f4/delta7-sigma", Jordan, "delta7 sigma", "sigma sigma_prime delta7", Reference, conj),
        identity("f4/delta6-square", Jordan, "delta6^2", "1", Reference, "involution"),
        identity("f4/delta7-square", Jordan, "delta7^2", "1", Reference, "involution"),
        identity("f4/sigma-sigma_prime", Jordan, "sigma sigma_prime", "sigma_prime sigma", Reference, "commuting pair"),
        identity("e6/rho2-square", Jordan, "rho2^2", "1", Reference, "involution"),
        identity("e6/rho2-delta1", Jordan, "delta1 rho2", "rho2 delta1", Reference, "commuting pair"),
        identity("e6/rho2-delta2", Jordan, "delta2 rho2", "rho2 delta2", Reference, "commuting pair"),
        identity("e6/rho2-gamma", Jordan, "gamma rho2", "rho2 gamma", Reference, "commuting pair"),
        identity("e6/delta9-square", Jordan, "delta9^2", "sigma", Reference, "square root of sigma"),
        identity("e6/delta9-sigma", Jordan, "delta9 sigma", "sigma delta9", Reference, "commuting pair"),
        identity("e6/delta9-transpose", Jordan, "delta9^T", "delta9", Reference, "symmetric for (X, Y)"),
        identity("e7/delta_lambda-iota", Freudenthal, "delta_lambda iota", "lambda delta_lambda", Reference, conj),
        identity("e7/delta_lambda-gamma", Freudenthal, "delta_lambda gamma", "gamma delta_lambda", Reference, "commuting pair"),
        identity("e7/delta_lambda-gamma_C", Freudenthal, "delta_lambda gamma_C", "gamma_C delta_lambda", Reference, "commuting pair"),
        identity("e7/delta_iota-lambda.iota", Freudenthal, "lambda iota delta_iota", "delta_iota lambda", Derived, "conjugates lambda.iota to lambda"),
        identity("e7/phi(6)-lambda", Freudenthal, "phi(6) lambda phi(6)^-1", "-lambda", Derived, "conjugates lambda to -lambda"),
        identity("e7/delta10-iota", Freudenthal, "delta10 iota", "-sigma iota delta10", Reference, conj),
        identity("e7/lambda-iota", Freudenthal, "lambda iota", "-iota lambda", Derived, "anticommuting pair; commutes in the adjoint action"),
        identity("e7/lambda-square", Freudenthal, "lambda^2", "-1", Reference, "lambda^2 = -1"),
        identity("e7/iota-square", Freudenthal, "iota^2", "-1", Reference, "iota^2 = -1"),
        identity("e8/delta_upsilon-square", E8, "delta_upsilon^2", "upsilon", Reference, "square root of upsilon"),
        identity("e8/delta_upsilon-conjugation", E8, "delta_upsilon lambda_omega gamma upsilon", "lambda_omega gamma delta_upsilon", Reference, conj),
        identity("e8/delta_upsilon-lambda", E8, "delta_upsilon lambda", "lambda delta_upsilon", Reference, "commuting pair"),
        identity("e8/iota_omega-square", E8, "iota_omega^2", "1", Reference, "involution"),
        identity("e8/upsilon_iota_omega-square", E8, "upsilon_iota_omega^2", "1", Reference, "involution"),
        identity("e8/upsilon_iota_omega-product", E8, "upsilon iota_omega", "upsilon_iota_omega", Trivial, "composite agrees with its displayed form"),
        identity("e8/lambda_omega-square", E8, "lambda_omega^2", "1", Derived, "involution"),
        identity("e8/upsilon-square", E8, "upsilon^2", "1", Trivial, "involution"),
        identity("e8/sigma-square", E8, "sigma^2", "1", Trivial, "involution"),
        identity("e8/sigma_prime-square", E8, "sigma_prime^2", "1", Trivial, "involution"),
        identity("e8/tau-lambda_omega", E8, "tau lambda_omega", "lambda_omega tau", Reference, "commuting pair"),
        identity("e8/compact-conjugation-square", E8, "tau lambda_omega tau lambda_omega", "1", Derived, "the compact conjugation is involutive"),
    ];
    for (t, v) in [(1, 5), (3, 2)] {
        for (name, word) in [("phi1", format!("phi1({t})")), ("phi2", format!("phi2({v})"))] {
            for s in ["sigma", "sigma_prime"] {
                out.push(identity(&format!("e6/{name}({})-{s}", if name == "phi1" { t } else { v }), Jordan, &format!("{word} {s}"), &format!("{s} {word}"), Reference, "commuting pair"));
            }
        }
        out.push(identity(&format!("e6/phi1({t})-phi2({v})"), Jordan, &format!("phi1({t}) phi2({v})"), &format!("phi2({v}) phi1({t})"), Reference, "commuting pair"));
        out.push((
            spec(format!("identities/e6/phi2({v})-fixes-E1"), CheckKind::Identity, vec!["jordan".into(), format!("phi2({v})")], json!(true), Reference, "phi2 lies in the stabilizer of E1"),
            Task::FixesE1 { word: format!("phi2({v})") },
        ));
    }
    for k in [1, 3, 5] {
        out.push(identity(&format!("e7/lambda-phi({k})"), Freudenthal, &format!("lambda phi({k}) lambda^-1"), &format!("phi({})", -k), Reference, "lambda inverts phi"));
        out.push(identity(&format!("e7/gamma-phi({k})"), Freudenthal, &format!("gamma phi({k}) gamma"), &format!("phi({k})"), Reference, "gamma centralizes phi"));
    }
    let conj_dims = "conjugate involutions have equal fixed dimensions";
    for (a, x, y) in [
        ("g2", "gamma", "gamma_H"),
        ("g2", "gamma", "gamma gamma_H"),
        ("g2", "gamma", "gamma_C"),
        ("g2", "gamma", "gamma gamma_C"),
        ("f4", "gamma", "gamma sigma"),
        ("f4", "sigma", "sigma_prime"),
        ("f4", "sigma", "sigma sigma_prime"),
        ("e6", "sigma", "gamma_H rho2"),
        ("e6", "sigma", "gamma gamma_H rho2"),
        ("e7", "iota", "lambda"),
        ("e7", "lambda iota", "-lambda"),
        ("e7", "iota", "-sigma iota"),
        ("e7", "lambda gamma", "lambda iota gamma gamma_C"),
        ("e8", "lambda_omega gamma upsilon", "lambda_omega gamma"),
    ] {
        out.push((
            spec(
                format!("conjugate-dims/{a}/{}~{}", x.replace(' ', "."), y.replace(' ', ".")),
                CheckKind::Invariant,
                vec![a.into(), x.into(), y.into()],
                json!(true),
                Derived,
                conj_dims,
            ),
            Task::EqualDims { alg: alg(a), a: x.into(), b: y.into() },
        ));
    }
    let groups: [(AlgebraId, &[&str]); 5] = [
        (AlgebraId::G2, &["gamma", "gamma_H", "gamma_C", "delta1", "delta2", "delta3", "delta4", "w"]),
        (AlgebraId::F4, &["sigma", "sigma_prime", "gamma", "gamma_H", "gamma_C", "delta5", "delta6", "delta7"]),
        (AlgebraId::E6, &["delta9", "rho2", "phi1(1)", "phi1(3)", "phi2(5)", "phi2(2)", "sigma", "gamma"]),
        (AlgebraId::E7, &["lambda", "iota", "phi(1)", "phi(3)", "delta_lambda", "delta_iota", "delta10", "gamma", "sigma", "gamma_C"]),
        (AlgebraId::E8, &["lambda_omega", "upsilon", "iota_omega", "upsilon_iota_omega", "sigma", "sigma_prime", "gamma", "lambda", "delta_upsilon"]),
    ];
    for (g, maps) in groups {
        let how = match g {
            AlgebraId::G2 => "exact: preserves the product on all basis pairs",
            AlgebraId::F4 => "exact: preserves the Jordan product on all basis pairs",
            AlgebraId::E6 => "exact: preserves the cross product and the Hermitian form",
            AlgebraId::E7 => "exact: preserves P x Q on all basis pairs and the Hermitian form",
            AlgebraId::E8 => "exact bracket preservation on structured and sampled pairs",
        };
        for m in maps {
            out.push((
                spec(format!("membership/{g}/{m}"), CheckKind::Membership, vec![g.name().into(), m.to_string()], json!(true), Reference, how),
                Task::Membership { group: g, word: m.to_string() },
            ));
        }
    }
    out
}

fn seed_for(ctx: &Context, salt: u64) -> u64 {
    ctx.config.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

fn cyc_vec(v: &SVec) -> Value {
    Value::Array(v.entries().iter().map(|(k, c)| json!([k, c.to_string()])).collect())
}

pub fn evaluate(task: &Task, ctx: &Context) -> Result<Outcome, String> {
    match task {
        Task::BasisDim(id) => Ok(Outcome::value(json!(ctx.basis(*id)?.dim()))),
        Task::Closure(id) => closure(&*ctx.basis(*id)?),
        Task::RealForm(id) => Ok(match ctx.basis(*id)?.check_real_form() {
            Ok(()) => Outcome::value(json!(true)),
            Err(e) => Outcome { actual: json!(false), counterexample: Some(json!(e.to_string())), notes: String::new() },
        }),
        Task::JacobiTable(id) => {
            let b = ctx.basis(*id)?;
            Ok(match b.table.jacobi_violation() {
                None => Outcome::value(json!(true)),
                Some((i, j, k)) => Outcome { actual: json!(false), counterexample: Some(json!([i, j, k])), notes: String::new() },
            })
        }
        Task::RowLabels => row_labels(ctx),
        Task::DualRoute => dual_route(ctx),
        Task::Antisymmetry => antisymmetry(ctx),
        Task::JacobiOperator => jacobi_operator(ctx),
        Task::OctAlternative => Ok(oct_alternative(seed_for(ctx, 11))),
        Task::TrilinearSymmetry => Ok(trilinear_symmetry(seed_for(ctx, 12))),
        Task::FixedDim { alg, words } => {
            let b = ctx.basis(*alg)?;
            let acts = words.iter().map(|w| b.act_word(w)).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
            let refs: Vec<_> = acts.iter().collect();
            let r = b.fixed_subalgebra(&refs, false).map_err(|e| e.to_string())?;
            Ok(Outcome::value(json!(r.dim)))
        }
        Task::Involutive { alg, word } => {
            let a = ctx.basis(*alg)?.act_word(word).map_err(|e| e.to_string())?;
            Ok(Outcome::value(json!(a.involutive)))
        }
        Task::Table1(row, part) => table1_part(ctx, row, *part),
        Task::E1Stabilizer => {
            let b = ctx.basis(AlgebraId::E6)?;
            Ok(Outcome::value(json!(e1_stabilizer_sigma_prime_dim(&b).map_err(|e| e.to_string())?)))
        }
        Task::Identity { level, lhs, rhs } => identity_check(ctx, *level, lhs, rhs),
        Task::FixesE1 { word } => {
            let g = words::group_word(Level::Jordan, word, None).map_err(|e| e.to_string())?;
            let e1 = JordanElem::e(1).to_svec();
            let img = g.apply(&e1);
            Ok(if img == e1 {
                Outcome::value(json!(true))
            } else {
                Outcome { actual: json!(false), counterexample: Some(cyc_vec(&img)), notes: String::new() }
            })
        }
        Task::Membership { group, word } => membership(ctx, *group, word),
        Task::EqualDims { alg, a, b } => {
            let basis = ctx.basis(*alg)?;
            let da = basis.act_word(a).and_then(|x| x.fixed_dim()).map_err(|e| e.to_string())?;
            let db = basis.act_word(b).and_then(|x| x.fixed_dim()).map_err(|e| e.to_string())?;
            Ok(Outcome { actual: json!(da == db), counterexample: None, notes: format!("{da} vs {db}") })
        }
    }
}

fn closure(b: &LieBasis) -> Result<Outcome, String> {
    // the coordinate table itself is recomputed from the representation and compared
    let fresh = match &b.rep {
        Representation::Matrix(m) => m.table(),
        Representation::E7(c) => c.table(),
        Representation::E8(sp) => sp.table(super::BRACKET_ROWS),
    };
    let fresh = match fresh {
        Ok(t) => t,
        Err(e) => return Ok(Outcome { actual: json!(false), counterexample: Some(json!(e.to_string())), notes: String::new() }),
    };
    if fresh != b.table {
        return Ok(Outcome { actual: json!(false), counterexample: None, notes: "stored table differs from recomputed table".into() });
    }
    let n = b.dim();
    let solver = SpanSolver::new(n, &b.vectors).map_err(|e| e.to_string())?;
    for i in 0..n {
        for j in i + 1..n {
            let br = b.bracket(&b.vectors[i], &b.vectors[j]);
            match solver.express(&br) {
                Some(c) if c.is_real() => {}
                _ => return Ok(Outcome { actual: json!(false), counterexample: Some(json!([i, j])), notes: String::new() }),
            }
        }
    }
    Ok(Outcome::value(json!(true)))
}

fn random_triples(rng: &mut ChaCha8Rng, n: usize, dim: usize) -> Vec<(usize, usize, usize)> {
    (0..n).map(|_| (rng.gen_range(0..dim), rng.gen_range(0..dim), rng.gen_range(0..dim))).collect()
}

fn row_labels(ctx: &Context) -> Result<Outcome, String> {
    let sp = ctx.e8_space()?;
    let standard = &ctx.basis(AlgebraId::E8)?.table;
    let literal = sp.table(BracketRows::Literal).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(ctx, 21));
    let triples = random_triples(&mut rng, ctx.config.sample.max(JACOBI_TRIPLES), e8::DIM);
    let holds = |t: &crate::liealg::StructureTable| triples.iter().find(|(i, j, k)| !t.jacobi_sum(*i, *j, *k).is_zero()).copied();
    let (s, l) = (holds(standard), holds(&literal));
    Ok(Outcome {
        actual: json!({"standard": s.is_none(), "literal": l.is_none()}),
        counterexample: s.map(|(i, j, k)| json!({"standard": [i, j, k]})),
        notes: l.map(|(i, j, k)| format!("literal labelling violates Jacobi on basis triple ({i}, {j}, {k})")).unwrap_or_default(),
    })
}

fn structured_elem(rng: &mut ChaCha8Rng) -> SVec {
    // a unit vector or a sparse combination inside one block
    let blocks = [(0, e8::PHI_DIM), (e8::P0, e8::Q0), (e8::Q0, e8::R), (e8::R, e8::DIM)];
    let (lo, hi) = blocks[rng.gen_range(0..blocks.len())];
    if rng.gen_bool(0.5) {
        SVec::unit(rng.gen_range(lo..hi))
    } else {
        e8::random_slot_vec(rng, lo, hi, 3)
    }
}

fn mixed_elem(rng: &mut ChaCha8Rng) -> SVec {
    if rng.gen_bool(0.5) {
        structured_elem(rng)
    } else {
        e8::random_slot_vec(rng, 0, e8::DIM, 5)
    }
}

fn dual_route(ctx: &Context) -> Result<Outcome, String> {
    let sp = ctx.e8_space()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(ctx, 22));
    for _ in 0..ctx.config.sample.max(ANTISYMMETRY_PAIRS) {
        let (u, v) = (mixed_elem(&mut rng), mixed_elem(&mut rng));
        let op = e8::bracket_with(&sp.from_coords(&u), &sp.from_coords(&v), super::BRACKET_ROWS).map_err(|e| e.to_string())?;
        let op = sp.to_coords(&op).map_err(|e| e.to_string())?;
        if op != sp.bracket_coords(&u, &v, super::BRACKET_ROWS) {
            return Ok(Outcome { actual: json!(false), counterexample: Some(json!([cyc_vec(&u), cyc_vec(&v)])), notes: String::new() });
        }
    }
    Ok(Outcome::value(json!(true)))
}

fn antisymmetry(ctx: &Context) -> Result<Outcome, String> {
    let sp = ctx.e8_space()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(ctx, 23));
    for _ in 0..ANTISYMMETRY_PAIRS {
        let (u, v) = (mixed_elem(&mut rng), mixed_elem(&mut rng));
        let (a, b) = (sp.from_coords(&u), sp.from_coords(&v));
        let ab = e8::bracket_with(&a, &b, super::BRACKET_ROWS).map_err(|e| e.to_string())?;
        let ba = e8::bracket_with(&b, &a, super::BRACKET_ROWS).map_err(|e| e.to_string())?;
        if !ab.add(&ba).is_zero() {
            return Ok(Outcome { actual: json!(false), counterexample: Some(json!([cyc_vec(&u), cyc_vec(&v)])), notes: String::new() });
        }
    }
    Ok(Outcome::value(json!(true)))
}

fn jacobi_operator(ctx: &Context) -> Result<Outcome, String> {
    let sp = ctx.e8_space()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(ctx, 24));
    for _ in 0..JACOBI_TRIPLES {
        let xs = [structured_elem(&mut rng), structured_elem(&mut rng), mixed_elem(&mut rng)];
        let [a, b, c] = [0, 1, 2].map(|k| sp.from_coords(&xs[k]));
        if !e8::jacobi_check(&a, &b, &c).map_err(|e| e.to_string())? {
            let ce = xs.iter().map(cyc_vec).collect::<Vec<_>>();
            return Ok(Outcome { actual: json!(false), counterexample: Some(Value::Array(ce)), notes: String::new() });
        }
    }
    Ok(Outcome::value(json!(true)))
}

fn small(rng: &mut ChaCha8Rng) -> i64 {
    rng.gen_range(-3..=3)
}

fn random_octonion(rng: &mut ChaCha8Rng) -> Octonion {
    Octonion::from_ints(std::array::from_fn(|_| small(rng)))
}

fn oct_alternative(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 0..ALTERNATIVE_TRIPLES {
        let (x, y, z) = (random_octonion(&mut rng), random_octonion(&mut rng), random_octonion(&mut rng));
        let left = x.mul(&x).mul(&y) == x.mul(&x.mul(&y));
        let right = y.mul(&x).mul(&x) == y.mul(&x.mul(&x));
        let moufang = z.mul(&x.mul(&z.mul(&y))) == z.mul(&x).mul(&z).mul(&y);
        if !(left && right && moufang) {
            return Outcome { actual: json!(false), counterexample: Some(json!(n)), notes: format!("triple {n} fails") };
        }
    }
    Outcome::value(json!(true))
}

fn random_jordan(rng: &mut ChaCha8Rng) -> JordanElem {
    let i = CycNum::i();
    let pairs = (0..jordan::DIM)
        .filter_map(|k| {
            let (a, b) = (small(rng), small(rng));
            let c = CycNum::from_i64(a).add(&i.mul(&CycNum::from_i64(b)));
            (!c.is_zero()).then_some((k, c))
        })
        .collect();
    JordanElem::from_svec(&SVec::from_pairs(pairs))
}

fn trilinear_symmetry(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 0..TRILINEAR_TRIPLES {
        let (x, y, z) = (random_jordan(&mut rng), random_jordan(&mut rng), random_jordan(&mut rng));
        let v = jordan::trilinear(&x, &y, &z);
        let perms = [jordan::trilinear(&y, &x, &z), jordan::trilinear(&z, &y, &x), jordan::trilinear(&x, &z, &y)];
        if perms.iter().any(|p| *p != v) {
            return Outcome { actual: json!(false), counterexample: Some(json!(n)), notes: format!("triple {n} fails") };
        }
    }
    Outcome::value(json!(true))
}

fn level_word(ctx: &Context, level: Level, word: &str) -> Result<SemilinearOp, String> {
    let space: Option<std::sync::Arc<E8Space>> = if level == Level::E8 { Some(ctx.e8_space()?) } else { None };
    words::group_word(level, word, space.as_deref()).map_err(|e| e.to_string())
}

fn identity_check(ctx: &Context, level: Level, lhs: &str, rhs: &str) -> Result<Outcome, String> {
    let (l, r) = (level_word(ctx, level, lhs)?, level_word(ctx, level, rhs)?);
    if l == r {
        return Ok(Outcome::value(json!(true)));
    }
    let ce = if l.conjugates_scalars != r.conjugates_scalars {
        json!({"linearity": [l.conjugates_scalars, r.conjugates_scalars]})
    } else {
        let j = (0..l.dim()).find(|&j| l.column(j) != r.column(j)).unwrap_or(0);
        json!({"basis_vector": j, "lhs": cyc_vec(&l.column(j)), "rhs": cyc_vec(&r.column(j))})
    };
    Ok(Outcome { actual: json!(false), counterexample: Some(ce), notes: String::new() })
}

fn membership(ctx: &Context, group: AlgebraId, word: &str) -> Result<Outcome, String> {
    let fail = |ce: Value| Ok(Outcome { actual: json!(false), counterexample: Some(ce), notes: String::new() });
    match group {
        AlgebraId::G2 => {
            let op = level_word(ctx, Level::Oct, word)?;
            match cayley::g2_violation(&op) {
                None => Ok(Outcome::value(json!(true))),
                Some((i, j)) => fail(json!([i, j])),
            }
        }
        AlgebraId::F4 => {
            let op = level_word(ctx, Level::Jordan, word)?;
            match jordan::f4_violation(&op) {
                None => Ok(Outcome::value(json!(true))),
                Some((i, j)) => fail(json!([i, j])),
            }
        }
        AlgebraId::E6 => {
            let op = level_word(ctx, Level::Jordan, word)?;
            match jordan::e6_violation(&op) {
                None => Ok(Outcome::value(json!(true))),
                Some(v) => fail(json!(format!("{v:?}"))),
            }
        }
        AlgebraId::E7 => {
            let op = level_word(ctx, Level::Freudenthal, word)?;
            match freudenthal::e7_violation(&op, MembershipMode::Full) {
                None => Ok(Outcome::value(json!(true))),
                Some(v) => fail(json!(format!("{v:?}"))),
            }
        }
        AlgebraId::E8 => {
            let op = level_word(ctx, Level::E8, word)?;
            let table = &ctx.basis(AlgebraId::E8)?.table;
            let mode = AutomorphismMode::Structured(ctx.config.sample.max(DEFAULT_MIN_PAIRS), seed_for(ctx, 31));
            match e8::automorphism_violation(&op, |a, b| table.bracket(a, b), mode) {
                None => Ok(Outcome::value(json!(true))),
                Some((a, b)) => fail(json!([cyc_vec(&a), cyc_vec(&b)])),
            }
        }
    }
}

/// Lower bound on sampled pairs for e8 membership.
const DEFAULT_MIN_PAIRS: usize = 500;

fn table1_row_data(ctx: &Context, row: &Table1Row) -> Result<Value, String> {
    ctx.memo(&format!("table1/{}", row.row), || {
        let err = |e: crate::liealg::LieError| e.to_string();
        let b = ctx.basis(alg(&row.algebra))?;
        let s = b.act_word(&row.sigma).map_err(err)?;
        let t = b.act_word(&row.tau).map_err(err)?;
        let st = b.act_word(&format!("{} {}", row.sigma, row.tau)).map_err(err)?;
        let k = b.fixed_subalgebra(&[&s, &t], true).map_err(err)?;
        let mut triple = vec![s.fixed_dim().map_err(err)?, t.fixed_dim().map_err(err)?, st.fixed_dim().map_err(err)?];
        let raw = triple.clone();
        triple.sort_unstable();
        Ok(json!({
            "dim": k.dim,
            "center": k.center_dim,
            "derived": k.derived_dim,
            "killing": k.killing_negdef,
            "types": triple,
            "types_raw": raw,
            "commute": pair_commutes_ad(&s, &t),
            "involutive": [s.involutive, t.involutive],
        }))
    })
}

fn table1_part(ctx: &Context, row: &Table1Row, part: Part) -> Result<Outcome, String> {
    let d = table1_row_data(ctx, row)?;
    let key = match part {
        Part::Dim => "dim",
        Part::Center => "center",
        Part::Derived => "derived",
        Part::Killing => "killing",
        Part::Types => "types",
        Part::Commute => "commute",
        Part::Involutive => "involutive",
    };
    let notes = match part {
        Part::Types => format!("in word order: {}", d["types_raw"]),
        _ => String::new(),
    };
    Ok(Outcome { actual: d[key].clone(), counterexample: None, notes })
}
