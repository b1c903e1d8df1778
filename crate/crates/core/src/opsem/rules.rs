//! The rule catalog. Identifiers are `<paragraph>/<name>`; `stable` marks the
//! cubically-stable rules.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    Value,
    Step,
    Congruence,
}

#[derive(Debug, Clone, Copy)]
pub struct RuleInfo {
    pub id: &'static str,
    pub kind: RuleKind,
    pub stable: bool,
    pub lhs: &'static str,
    pub rhs: &'static str,
}

use RuleKind::{Congruence as C, Step as S, Value as V};

macro_rules! rules {
    ($( $id:literal $kind:ident $stable:literal $lhs:literal => $rhs:literal ;)*) => {
        pub const RULES: &[RuleInfo] = &[
            $( RuleInfo { id: $id, kind: $kind, stable: $stable, lhs: $lhs, rhs: $rhs }, )*
        ];
    };
}

rules! {
    "types/val-pi" V true "pi (a : A) B" => "value";
    "types/val-sigma" V true "sg (a : A) B" => "value";
    "types/val-path" V true "path (x. A) M N" => "value";
    "types/val-eq" V true "eq A M N" => "value";
    "types/val-void" V true "void" => "value";
    "types/val-nat" V true "nat" => "value";
    "types/val-bool" V true "bool" => "value";
    "types/val-wbool" V true "wbool" => "value";
    "types/val-S1" V true "S1" => "value";
    "types/val-Upre" V true "U pre j" => "value";
    "types/val-Ukan" V true "U kan j" => "value";
    "types/val-V" V false "V x A B E" => "value";
    "types/V-0" S true "V 0 A B E" => "A";
    "types/V-1" S true "V 1 A B E" => "B";

    "kan/hcom-cong" C true "hcom A r ~> r' M [..]   (A steps to A')" => "hcom A' r ~> r' M [..]";
    "kan/coe-cong" C true "coe (x. A) r ~> r' M   (A steps to A')" => "coe (x. A') r ~> r' M";
    "kan/com" S true "com (y. A) r ~> r' M [ri=ri' y. Ni]"
        => "hcom A<r'/y> r ~> r' (coe (y. A) r ~> r' M) [ri=ri' y. coe (y. A) y ~> r' Ni]";
    "kan/fcom-eq" S true "fcom r ~> r M [..]" => "M";
    "kan/fcom-tube" S false "fcom r ~> r' M [ri=ri' y. Ni]   (least j with rj=rj')" => "Nj<r'/y>";
    "kan/fcom-val" V false "fcom r ~> r' M [ri=ri' y. Ni]   (r != r', all ri != ri')" => "value";
    "kan/ghcom-empty" S true "ghcom A r ~> r' M" => "M";
    "kan/ghcom" S true "ghcom A r ~> r' M [s=s' y. N] xi"
        => "hcom A r ~> r' M [s=0 z. T0] [s=1 z. T1] [s=s' y. N] xi, \
            Te = hcom A r ~> z M [s'=e y. N] [s'=1-e y. ghcom A r ~> y M xi] xi";
    "kan/gcom" S true "gcom (y. A) r ~> r' M [ri=ri' y. Ni]"
        => "ghcom A<r'/y> r ~> r' (coe (y. A) r ~> r' M) [ri=ri' y. coe (y. A) y ~> r' Ni]";

    "fun/app-cong" C true "app M N   (M steps to M')" => "app M' N";
    "fun/beta" S true "app (lam a. M) N" => "M[N/a]";
    "fun/val-lam" V true "lam a. M" => "value";
    "fun/hcom" S true "hcom (pi (a : A) B) r ~> r' M [ri=ri' y. Ni]"
        => "lam a. hcom B r ~> r' (app M a) [ri=ri' y. app Ni a]";
    "fun/coe" S true "coe (x. pi (a : A) B) r ~> r' M"
        => "lam a. coe (x. B[coe (x. A) r' ~> x a / a]) r ~> r' (app M (coe (x. A) r' ~> r a))";

    "sigma/fst-cong" C true "fst M   (M steps to M')" => "fst M'";
    "sigma/snd-cong" C true "snd M   (M steps to M')" => "snd M'";
    "sigma/val-pair" V true "pair M N" => "value";
    "sigma/fst-beta" S true "fst (pair M N)" => "M";
    "sigma/snd-beta" S true "snd (pair M N)" => "N";
    "sigma/hcom" S true "hcom (sg (a : A) B) r ~> r' M [ri=ri' y. Ni]"
        => "pair (hcom A r ~> r' (fst M) [ri=ri' y. fst Ni]) \
            (com (z. B[F/a]) r ~> r' (snd M) [ri=ri' y. snd Ni]), F = hcom A r ~> z (fst M) [ri=ri' y. fst Ni]";
    "sigma/coe" S true "coe (x. sg (a : A) B) r ~> r' M"
        => "pair (coe (x. A) r ~> r' (fst M)) (coe (x. B[coe (x. A) r ~> x (fst M) / a]) r ~> r' (snd M))";

    "path/dapp-cong" C true "dapp M r   (M steps to M')" => "dapp M' r";
    "path/beta" S true "dapp (dlam x. M) r" => "M<r/x>";
    "path/val-dlam" V true "dlam x. M" => "value";
    "path/hcom" S true "hcom (path (x. A) P0 P1) r ~> r' M [ri=ri' y. Ni]"
        => "dlam x. hcom A r ~> r' (dapp M x) [x=0 _. P0] [x=1 _. P1] [ri=ri' y. dapp Ni x]";
    "path/coe" S true "coe (y. path (x. A) P0 P1) r ~> r' M"
        => "dlam x. com (y. A) r ~> r' (dapp M x) [x=0 y. P0] [x=1 y. P1]";

    "eq/val-star" V true "*" => "value";
    "eq/hcom" S true "hcom (eq A E0 E1) r ~> r' M [..]" => "*";

    "nat/val-zero" V true "zero" => "value";
    "nat/val-suc" V true "suc M" => "value";
    "nat/natrec-cong" C true "natrec M Z (n a. S)   (M steps to M')" => "natrec M' Z (n a. S)";
    "nat/natrec-zero" S true "natrec zero Z (n a. S)" => "Z";
    "nat/natrec-suc" S true "natrec (suc M) Z (n a. S)" => "S[M/n][natrec M Z (n a. S)/a]";
    "nat/hcom" S true "hcom nat r ~> r' M [..]" => "M";
    "nat/coe" S true "coe (x. nat) r ~> r' M" => "M";

    "bool/val-true" V true "true" => "value";
    "bool/val-false" V true "false" => "value";
    "bool/if-cong" C true "if (b. A) M T F   (M steps to M')" => "if (b. A) M' T F";
    "bool/if-true" S true "if (b. A) true T F" => "T";
    "bool/if-false" S true "if (b. A) false T F" => "F";
    "bool/hcom" S true "hcom bool r ~> r' M [..]" => "M";
    "bool/coe" S true "coe (x. bool) r ~> r' M" => "M";

    "wbool/hcom" S true "hcom wbool r ~> r' M [..]" => "fcom r ~> r' M [..]";
    "wbool/if-fcom" S false "if (b. A) (fcom r ~> r' M [ri=ri' y. Ni]) T F   (fcom is a value)"
        => "com (z. A[H/b]) r ~> r' (if (b. A) M T F) [ri=ri' y. if (b. A) Ni T F], H = fcom r ~> z M [..]";
    "wbool/coe" S true "coe (x. wbool) r ~> r' M" => "M";

    "circle/hcom" S true "hcom S1 r ~> r' M [..]" => "fcom r ~> r' M [..]";
    "circle/loop-eps" S true "loop e" => "base";
    "circle/val-base" V true "base" => "value";
    "circle/val-loop" V false "loop x" => "value";
    "circle/elim-cong" C true "S1elim (c. A) M P (x. L)   (M steps to M')" => "S1elim (c. A) M' P (x. L)";
    "circle/elim-base" S true "S1elim (c. A) base P (x. L)" => "P";
    "circle/elim-loop" S false "S1elim (c. A) (loop w) P (x. L)" => "L<w/x>";
    "circle/elim-fcom" S false "S1elim (c. A) (fcom r ~> r' M [ri=ri' y. Ni]) P (x. L)   (fcom is a value)"
        => "com (z. A[F/c]) r ~> r' (S1elim (c. A) M P (x. L)) [ri=ri' y. S1elim (c. A) Ni P (x. L)], \
            F = fcom r ~> z M [..]";
    "circle/coe" S true "coe (x. S1) r ~> r' M" => "M";

    "ua/val-uain" V false "Vin x M N" => "value";
    "ua/uain-0" S true "Vin 0 M N" => "M";
    "ua/uain-1" S true "Vin 1 M N" => "N";
    "ua/uaproj-0" S true "Vproj 0 M F" => "app F M";
    "ua/uaproj-1" S true "Vproj 1 M F" => "M";
    "ua/uaproj-cong" C false "Vproj x M F   (M steps to M')" => "Vproj x M' F";
    "ua/uaproj-uain" S false "Vproj x (Vin x M N) F" => "N";
    "ua/hcom" S false "hcom (V x A B E) r ~> r' M [ri=ri' y. Ni]"
        => "Vin x O<r'/y> (hcom B r ~> r' (Vproj x M (fst E)) [ri=ri' y. Vproj x Ni (fst E)] \
            [x=0 y. app (fst E) O] [x=1 y. hcom B r ~> y M [..]]), O = hcom A r ~> y M [..]";
    "ua/coe-0" S true "coe (x. V x A B E) 0 ~> r' M"
        => "Vin r' M (coe (x. B) 0 ~> r' (app (fst E<0/x>) M))";
    "ua/coe-1" S true "coe (x. V x A B E) 1 ~> r' N"
        => "Vin r' (fst O) P, O = fst (app (snd E<r'/x>) (coe (x. B) 1 ~> r' N)), \
            P = hcom B<r'/x> 1 ~> 0 (coe (x. B) 1 ~> r' N) [r'=0 y. dapp (snd O) y] [r'=1 _. coe (x. B) 1 ~> r' N]";
    "ua/coe-name" S false "coe (x. V x A B E) y ~> r' M"
        => "Vin r' (fst R) (hcom B<r'/x> 1 ~> 0 P<r'/x> T), with O_e, P, Q_e, R, T as in the univalence rules";
    "ua/coe-other" S false "coe (y. V x A B E) r ~> r' M   (x != y)"
        => "Vin x (coe (y. A) r ~> r' M) (com (y. B) r ~> r' (Vproj x M (fst E<r/y>)) \
            [x=0 y. app (fst E) (coe (y. A) r ~> y M)] [x=1 y. coe (y. B) r ~> y M])";

    "univ/hcom" S true "hcom (U kan j) r ~> r' M [..]" => "fcom r ~> r' M [..]";
    "univ/coe" S true "coe (x. U k j) r ~> r' M" => "M";
    "univ/box-eq" S true "box r ~> r M [..]" => "M";
    "univ/box-tube" S false "box r ~> r' M [ri=ri' Ni]   (least j with rj=rj')" => "Nj";
    "univ/box-val" V false "box r ~> r' M [ri=ri' Ni]   (r != r', all ri != ri')" => "value";
    "univ/cap-eq" S true "cap r ~> r M [..]" => "M";
    "univ/cap-tube" S false "cap r ~> r' M [ri=ri' y. Bi]   (least j with rj=rj')" => "coe (y. Bj) r' ~> r M";
    "univ/cap-cong" C false "cap r ~> r' M [..]   (no equation holds, M steps to M')" => "cap r ~> r' M' [..]";
    "univ/cap-box" S false "cap r ~> r' (box r ~> r' M [..]) [..]   (no equation holds)" => "M";
    "univ/hcom-fcom" S false "hcom (fcom s ~> s' A [sj=sj' z. Bj]) r ~> r' M [ri=ri' y. Ni]"
        => "box s ~> s' Q [sj=sj' Pj<s'/z>], with P_j, F, O, Q as in the universe rules";
    "univ/coe-fcom" S false "coe (x. fcom s ~> s' A [si=si' z. Bi]) r ~> r' M"
        => "(box s ~> s' (hcom A s ~> s' P [si=si' z. coe (z. Bi) z ~> s Qi] [r=r' z. O]) [si=si' Qi<s'/z>])<r'/x>";
}

pub fn rule_info(id: &str) -> Option<&'static RuleInfo> {
    RULES.iter().find(|r| r.id == id)
}

pub(crate) fn stable(id: &str) -> bool {
    rule_info(id).unwrap_or_else(|| panic!("unknown rule `{id}`")).stable
}

/// Markdown table of the catalog.
pub fn catalog_table() -> String {
    let mut out = String::from("| rule | kind | stable | left-hand side | right-hand side |\n|---|---|---|---|---|\n");
    for r in RULES {
        let kind = match r.kind {
            RuleKind::Value => "value",
            RuleKind::Step => "step",
            RuleKind::Congruence => "congruence",
        };
        out.push_str(&format!(
            "| `{}` | {} | {} | `{}` | `{}` |\n",
            r.id,
            kind,
            if r.stable { "yes" } else { "no" },
            r.lhs,
            r.rhs
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn ids_are_unique_and_well_formed() {
        let ids: BTreeSet<_> = RULES.iter().map(|r| r.id).collect();
        assert_eq!(ids.len(), RULES.len());
        assert_eq!(RULES.len(), 91);
        for r in RULES {
            let (para, name) = r.id.split_once('/').unwrap();
            assert!(!para.is_empty() && !name.is_empty());
        }
    }

    #[test]
    fn unstable_rules() {
        let unstable: BTreeSet<_> = RULES.iter().filter(|r| !r.stable).map(|r| r.id).collect();
        for id in ["types/val-V", "circle/val-loop", "kan/fcom-val", "univ/box-val", "ua/val-uain", "ua/hcom"] {
            assert!(unstable.contains(id), "{id}");
        }
        for id in ["fun/beta", "circle/loop-eps", "ua/coe-0", "ua/coe-1", "univ/cap-eq"] {
            assert!(!unstable.contains(id), "{id}");
        }
    }
}
