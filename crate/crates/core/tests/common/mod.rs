//! Shared fixtures: one hand-written instance of every operational rule.
//!
//! Metavariables are inert free variables (`M`, `N`, `A`, ...) or, where a
//! substitution has to be visible, applications like `dapp Bf x`.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use ccl::opsem::fires::fires;
use ccl::opsem::{step, StepOutcome, RULES};
use ccl::syntax::{alpha_eq, parse, print, Term};

pub enum Expect {
    Value { stable: bool },
    Step { to: String, stable: bool },
}

pub struct Case {
    pub rule: &'static str,
    pub input: String,
    pub expect: Expect,
}

fn val(rule: &'static str, input: &str, stable: bool) -> Case {
    Case { rule, input: input.into(), expect: Expect::Value { stable } }
}

fn st(rule: &'static str, input: &str, to: &str, stable: bool) -> Case {
    Case { rule, input: input.into(), expect: Expect::Step { to: to.into(), stable } }
}

fn ghcom_cases() -> Vec<Case> {
    let t = |e: u8, o: u8| {
        format!("hcom A i ~> z M [w={e} y. N] [w={o} y. ghcom A i ~> y M [x=0 y. L]] [x=0 y. L]")
    };
    vec![st(
        "kan/ghcom",
        "ghcom A i ~> j M [k=w y. N] [x=0 y. L]",
        &format!("hcom A i ~> j M [k=0 z. {}] [k=1 z. {}] [k=w y. N] [x=0 y. L]", t(0, 1), t(1, 0)),
        true,
    )]
}

fn ua_cases() -> Vec<Case> {
    let vl = "V x (dapp Af x) (dapp Bf x) (dapp Ef x)";
    let coe1 = "coe (x. V x A (dapp Bf x) (dapp Ef x)) 1 ~> j N";
    let b1 = "coe (x. dapp Bf x) 1 ~> j N";
    let o1 = format!("fst (app (snd (dapp Ef j)) ({b1}))");
    let p1 = format!("hcom (dapp Bf j) 1 ~> 0 ({b1}) [j=0 y. dapp (snd ({o1})) y] [j=1 _. {b1}]");

    // The coercion out of a dimension name.
    let o = |e: &str| format!("Vproj w (coe (x. {vl}) {e} ~> w M) (fst (dapp Ef w))");
    let o_at = |e: &str| format!("Vproj j (coe (x. {vl}) {e} ~> j M) (fst (dapp Ef j))");
    let p_to = |src: &str, tgt: &str| {
        format!(
            "com (x. dapp Bf x) {src} ~> {tgt} (Vproj {src} M (fst (dapp Ef {src}))) [{src}=0 w. {}] [{src}=1 w. {}]",
            o("0"),
            o("1")
        )
    };
    let p0 = p_to("y", "0");
    let q = |e: &str, a: &str| {
        format!(
            "pair (coe (y. dapp Af 0) {e} ~> y {a}) (dlam z. com (y. dapp Bf 0) {e} ~> y ({}) \
             [z=0 y. app (fst (dapp Ef 0)) (coe (y. dapp Af 0) {e} ~> y {a})] [z=1 y. {p0}])",
            p_to(e, "0")
        )
    };
    let r = format!(
        "dapp (app (app (snd (app (snd (dapp Ef 0)) ({p0}))) ({})) ({})) y",
        q("0", "M"),
        q("1", &format!("(coe (x. {vl}) 1 ~> 0 M)"))
    );
    let name = format!(
        "Vin j (fst ({r})) (hcom (dapp Bf j) 1 ~> 0 ({}) [y=0 _. {}] [y=1 _. {}] \
         [y=j _. Vproj j M (fst (dapp Ef j))] [j=0 z. dapp (snd ({r})) z])",
        p_to("y", "j"),
        o_at("0"),
        o_at("1")
    );

    let hcom_o = "hcom A i ~> y M [k=0 y. N]";
    vec![
        val("ua/val-uain", "Vin x M N", false),
        st("ua/uain-0", "Vin 0 M N", "M", true),
        st("ua/uain-1", "Vin 1 M N", "N", true),
        st("ua/uaproj-0", "Vproj 0 M F", "app F M", true),
        st("ua/uaproj-1", "Vproj 1 M F", "M", true),
        st("ua/uaproj-cong", "Vproj x (fst (pair M P)) F", "Vproj x M F", false),
        st("ua/uaproj-uain", "Vproj x (Vin x M N) F", "N", false),
        st(
            "ua/hcom",
            "hcom (V x A B E) i ~> j M [k=0 y. N]",
            &format!(
                "Vin x (hcom A i ~> j M [k=0 y. N]) (hcom B i ~> j (Vproj x M (fst E)) [k=0 y. Vproj x N (fst E)] \
                 [x=0 y. app (fst E) ({hcom_o})] [x=1 y. hcom B i ~> y M [k=0 y. N]])"
            ),
            false,
        ),
        st(
            "ua/coe-0",
            "coe (x. V x A (dapp Bf x) (dapp Ef x)) 0 ~> j M",
            "Vin j M (coe (x. dapp Bf x) 0 ~> j (app (fst (dapp Ef 0)) M))",
            true,
        ),
        st("ua/coe-1", coe1, &format!("Vin j (fst ({o1})) ({p1})"), true),
        st("ua/coe-name", &format!("coe (x. {vl}) y ~> j M"), &name, false),
        st(
            "ua/coe-other",
            "coe (y. V x (dapp Af y) (dapp Bf y) (dapp Ef y)) i ~> j M",
            "Vin x (coe (y. dapp Af y) i ~> j M) (com (y. dapp Bf y) i ~> j (Vproj x M (fst (dapp Ef i))) \
             [x=0 y. app (fst (dapp Ef y)) (coe (y. dapp Af y) i ~> y M)] [x=1 y. coe (y. dapp Bf y) i ~> y M])",
            false,
        ),
    ]
}

fn fcom_type_cases() -> Vec<Case> {
    // hcom in fcom k ~> l A [w=0 z. dapp Bf z]
    let b = "dapp Bf z";
    let f = |c: &str| {
        format!("hcom A l ~> z (cap k ~> l {c} [w=0 z. {b}]) [w=0 u. coe (z. {b}) u ~> k (coe (z. {b}) l ~> u {c})]")
    };
    let f_at_k = |c: &str| {
        format!("hcom A l ~> k (cap k ~> l {c} [w=0 z. {b}]) [w=0 u. coe (z. {b}) u ~> k (coe (z. {b}) l ~> u {c})]")
    };
    let p = format!("hcom {b} i ~> j (coe (z. {b}) l ~> z M) [x=0 y. coe (z. {b}) l ~> z (dapp Nf y)]");
    let p_l = "hcom (dapp Bf l) i ~> j (coe (z. dapp Bf z) l ~> l M) [x=0 y. coe (z. dapp Bf z) l ~> l (dapp Nf y)]";
    let o = format!("hcom A i ~> j ({}) [x=0 y. {}]", f_at_k("M"), f_at_k("(dapp Nf y)"));
    let q = format!(
        "hcom A k ~> l ({o}) [x=0 z. {}] [w=0 z. coe (z. {b}) z ~> k ({p})] [i=j z. {}]",
        f("(dapp Nf j)"),
        f("M")
    );
    let hcom_fcom = format!("box k ~> l ({q}) [w=0 {p_l}]");

    // coe along fcom k ~> l (dapp Af x) [w=0 z. dapp Bf z] [x=1 z. dapp Cf z]
    let n = |bf: &str, tgt: &str| format!("coe (z. dapp {bf} z) l ~> z (coe (x. dapp {bf} l) i ~> {tgt} M)");
    let n_at_k = format!("coe (z. dapp Bf z) l ~> k (coe (x. dapp Bf l) i ~> x M)");
    let cap = "cap k ~> l M [w=0 z. dapp Bf z] [i=1 z. dapp Cf z]";
    let o_with = |tgt: &str| {
        format!(
            "hcom (dapp Af i) l ~> {tgt} ({cap}) [w=0 z. coe (z. dapp Bf z) z ~> k ({})] [i=1 z. coe (z. dapp Cf z) z ~> k ({})]",
            n("Bf", "i"),
            n("Cf", "i")
        )
    };
    let p2 = format!("gcom (x. dapp Af x) i ~> j ({}) [w=0 x. {n_at_k}] [k=l x. coe (x. dapp Af x) i ~> x M]", o_with("k"));
    let qk = |bf: &str, nk: &str, tgt: &str| {
        format!("gcom (z. dapp {bf} z) k ~> {tgt} ({p2}) [w=0 z. {}] [i=j z. {nk}]", n("Bf", "j"))
    };
    let (n1j, n2j) = (n("Bf", "j"), n("Cf", "j"));
    let coe_fcom = format!(
        "box k ~> l (hcom (dapp Af j) k ~> l ({p2}) [w=0 z. coe (z. dapp Bf z) z ~> k ({})] \
         [j=1 z. coe (z. dapp Cf z) z ~> k ({})] [i=j z. {}]) [w=0 {}] [j=1 {}]",
        qk("Bf", &n1j, "z"),
        qk("Cf", &n2j, "z"),
        o_with("z"),
        qk("Bf", &n1j, "l"),
        qk("Cf", &n2j, "l")
    );

    vec![
        st("univ/hcom-fcom", "hcom (fcom k ~> l A [w=0 z. dapp Bf z]) i ~> j M [x=0 y. dapp Nf y]", &hcom_fcom, false),
        st(
            "univ/coe-fcom",
            "coe (x. fcom k ~> l (dapp Af x) [w=0 z. dapp Bf z] [x=1 z. dapp Cf z]) i ~> j M",
            &coe_fcom,
            false,
        ),
    ]
}

pub fn cases() -> Vec<Case> {
    let mut v = vec![
        val("types/val-pi", "pi (a : A) B", true),
        val("types/val-sigma", "sg (a : A) B", true),
        val("types/val-path", "path (x. A) M N", true),
        val("types/val-eq", "eq A M N", true),
        val("types/val-void", "void", true),
        val("types/val-nat", "nat", true),
        val("types/val-bool", "bool", true),
        val("types/val-wbool", "wbool", true),
        val("types/val-S1", "S1", true),
        val("types/val-Upre", "U pre 0", true),
        val("types/val-Ukan", "U kan 1", true),
        val("types/val-V", "V x A B E", false),
        st("types/V-0", "V 0 A B E", "A", true),
        st("types/V-1", "V 1 A B E", "B", true),
        // Kan operations
        st("kan/hcom-cong", "hcom (fst (pair A C)) i ~> j M [k=0 y. N]", "hcom A i ~> j M [k=0 y. N]", true),
        st("kan/coe-cong", "coe (x. fst (pair A C)) i ~> j M", "coe (x. A) i ~> j M", true),
        st(
            "kan/com",
            "com (y. V y C D E) i ~> j M [k=0 y. loop y]",
            "hcom (V j C D E) i ~> j (coe (y. V y C D E) i ~> j M) [k=0 y. coe (y. V y C D E) y ~> j (loop y)]",
            true,
        ),
        st("kan/fcom-eq", "fcom i ~> i M [k=0 y. N]", "M", true),
        st("kan/fcom-tube", "fcom i ~> j M [k=0 y. N] [w=w y. loop y]", "loop j", false),
        val("kan/fcom-val", "fcom i ~> j M [k=0 y. N]", false),
        st("kan/ghcom-empty", "ghcom A i ~> j M", "M", true),
        st(
            "kan/gcom",
            "gcom (y. V y C D E) i ~> j M [k=0 y. N]",
            "ghcom (V j C D E) i ~> j (coe (y. V y C D E) i ~> j M) [k=0 y. coe (y. V y C D E) y ~> j N]",
            true,
        ),
        // Dependent functions
        st("fun/app-cong", "app (fst (pair F G)) N", "app F N", true),
        st("fun/beta", "app (lam a. pair a a) N", "pair N N", true),
        val("fun/val-lam", "lam a. a", true),
        st(
            "fun/hcom",
            "hcom (pi (a : A) (app Bf a)) i ~> j M [k=0 y. N]",
            "lam a. hcom (app Bf a) i ~> j (app M a) [k=0 y. app N a]",
            true,
        ),
        st(
            "fun/coe",
            "coe (x. pi (a : A) (app Bf a)) i ~> j M",
            "lam a. coe (x. app Bf (coe (x. A) j ~> x a)) i ~> j (app M (coe (x. A) j ~> i a))",
            true,
        ),
        // Dependent pairs
        st("sigma/fst-cong", "fst (snd (pair M P))", "fst P", true),
        st("sigma/snd-cong", "snd (fst (pair P M))", "snd P", true),
        val("sigma/val-pair", "pair M N", true),
        st("sigma/fst-beta", "fst (pair M N)", "M", true),
        st("sigma/snd-beta", "snd (pair M N)", "N", true),
        st(
            "sigma/hcom",
            "hcom (sg (a : A) (app Bf a)) i ~> j M [k=0 y. N]",
            "pair (hcom A i ~> j (fst M) [k=0 y. fst N]) \
             (com (z. app Bf (hcom A i ~> z (fst M) [k=0 y. fst N])) i ~> j (snd M) [k=0 y. snd N])",
            true,
        ),
        st(
            "sigma/coe",
            "coe (x. sg (a : A) (app Bf a)) i ~> j M",
            "pair (coe (x. A) i ~> j (fst M)) (coe (x. app Bf (coe (x. A) i ~> x (fst M))) i ~> j (snd M))",
            true,
        ),
        // Paths
        st("path/dapp-cong", "dapp (fst (pair P Q)) i", "dapp P i", true),
        st("path/beta", "dapp (dlam x. loop x) i", "loop i", true),
        val("path/val-dlam", "dlam x. M", true),
        st(
            "path/hcom",
            "hcom (path (x. A) P Q) i ~> j M [k=0 y. N]",
            "dlam x. hcom A i ~> j (dapp M x) [x=0 _. P] [x=1 _. Q] [k=0 y. dapp N x]",
            true,
        ),
        st(
            "path/coe",
            "coe (y. path (x. A) P Q) i ~> j M",
            "dlam x. com (y. A) i ~> j (dapp M x) [x=0 y. P] [x=1 y. Q]",
            true,
        ),
        // Equality
        val("eq/val-star", "*", true),
        st("eq/hcom", "hcom (eq A P Q) i ~> j M [k=0 y. N]", "*", true),
        // Natural numbers
        val("nat/val-zero", "zero", true),
        val("nat/val-suc", "suc M", true),
        st("nat/natrec-cong", "natrec (fst (pair M P)) Z (n a. S)", "natrec M Z (n a. S)", true),
        st("nat/natrec-zero", "natrec zero Z (n a. S)", "Z", true),
        st("nat/natrec-suc", "natrec (suc M) Z (n a. pair n a)", "pair M (natrec M Z (n a. pair n a))", true),
        st("nat/hcom", "hcom nat i ~> j M [k=0 y. N]", "M", true),
        st("nat/coe", "coe (x. nat) i ~> j M", "M", true),
        // Booleans
        val("bool/val-true", "true", true),
        val("bool/val-false", "false", true),
        st("bool/if-cong", "if (b. A) (fst (pair M P)) T F", "if (b. A) M T F", true),
        st("bool/if-true", "if (b. A) true T F", "T", true),
        st("bool/if-false", "if (b. A) false T F", "F", true),
        st("bool/hcom", "hcom bool i ~> j M [k=0 y. N]", "M", true),
        st("bool/coe", "coe (x. bool) i ~> j M", "M", true),
        // Weak booleans
        st("wbool/hcom", "hcom wbool i ~> j M [k=0 y. N]", "fcom i ~> j M [k=0 y. N]", true),
        st(
            "wbool/if-fcom",
            "if (b. app Af b) (fcom i ~> j M [k=0 y. N]) T F",
            "com (z. app Af (fcom i ~> z M [k=0 y. N])) i ~> j (if (b. app Af b) M T F) [k=0 y. if (b. app Af b) N T F]",
            false,
        ),
        st("wbool/coe", "coe (x. wbool) i ~> j M", "M", true),
        // Circle
        st("circle/hcom", "hcom S1 i ~> j M [k=0 y. N]", "fcom i ~> j M [k=0 y. N]", true),
        st("circle/loop-eps", "loop 1", "base", true),
        val("circle/val-base", "base", true),
        val("circle/val-loop", "loop x", false),
        st("circle/elim-cong", "S1elim (c. A) (fst (pair M Q)) P (x. L)", "S1elim (c. A) M P (x. L)", true),
        st("circle/elim-base", "S1elim (c. A) base P (x. L)", "P", true),
        st("circle/elim-loop", "S1elim (c. A) (loop w) P (x. pair L (loop x))", "pair L (loop w)", false),
        st(
            "circle/elim-fcom",
            "S1elim (c. app Af c) (fcom i ~> j M [k=0 y. N]) P (x. L)",
            "com (z. app Af (fcom i ~> z M [k=0 y. N])) i ~> j (S1elim (c. app Af c) M P (x. L)) \
             [k=0 y. S1elim (c. app Af c) N P (x. L)]",
            false,
        ),
        st("circle/coe", "coe (x. S1) i ~> j M", "M", true),
        // Universes
        st("univ/hcom", "hcom (U kan 0) i ~> j M [k=0 y. N]", "fcom i ~> j M [k=0 y. N]", true),
        st("univ/coe", "coe (x. U pre 1) i ~> j M", "M", true),
        st("univ/box-eq", "box i ~> i M [k=0 N]", "M", true),
        st("univ/box-tube", "box i ~> j M [k=0 N] [w=w L]", "L", false),
        val("univ/box-val", "box i ~> j M [k=0 N]", false),
        st("univ/cap-eq", "cap i ~> i M [k=0 y. B]", "M", true),
        st("univ/cap-tube", "cap i ~> j M [k=0 y. B] [w=w y. dapp Bf y]", "coe (y. dapp Bf y) j ~> i M", false),
        st("univ/cap-cong", "cap i ~> j (fst (pair M P)) [k=0 y. B]", "cap i ~> j M [k=0 y. B]", false),
        st("univ/cap-box", "cap i ~> j (box i ~> j M [k=0 N]) [k=0 y. B]", "M", false),
    ];
    v.extend(ghcom_cases());
    v.extend(ua_cases());
    v.extend(fcom_type_cases());
    v
}

pub struct Transcription {
    pub total: usize,
    pub covered: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl Transcription {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.covered == self.total
    }
}

fn check(c: &Case) -> Result<(), String> {
    let m = parse(&c.input).map_err(|e| format!("input: {e}"))?;
    let out = step(&m);
    if out.root_rule() != Some(c.rule) {
        return Err(format!("root rule {:?}", out.root_rule()));
    }
    if fires(&m) != vec![c.rule] {
        return Err(format!("fires {:?}", fires(&m)));
    }
    match (&c.expect, out) {
        (Expect::Value { stable }, StepOutcome::Value { stable: s, .. }) if *stable == s => Ok(()),
        (Expect::Step { to, stable }, StepOutcome::StepsTo { next, stable: s, .. }) => {
            let want: Term = parse(to).map_err(|e| format!("expected side: {e}"))?;
            if !alpha_eq(&next, &want) {
                return Err(format!("stepped to\n  {}\nexpected\n  {}", print(&next), print(&want)));
            }
            if *stable != s {
                return Err(format!("stability {s}, expected {stable}"));
            }
            Ok(())
        }
        (_, o) => Err(format!("unexpected outcome {o:?}")),
    }
}

pub fn transcription() -> Transcription {
    let start = Instant::now();
    let cases = cases();
    let mut failures = Vec::new();
    let mut hit = BTreeSet::new();
    for c in &cases {
        match check(c) {
            Ok(()) => {
                hit.insert(c.rule);
            }
            Err(e) => failures.push(format!("{}: {e}", c.rule)),
        }
    }
    let ids: BTreeSet<&str> = RULES.iter().map(|r| r.id).collect();
    for c in &cases {
        if !ids.contains(c.rule) {
            failures.push(format!("{}: not a rule", c.rule));
        }
    }
    Transcription {
        total: ids.len(),
        covered: ids.intersection(&hit).count(),
        failures,
        elapsed: start.elapsed(),
    }
}
