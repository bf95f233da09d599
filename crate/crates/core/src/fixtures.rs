//! Named posets used throughout tests, examples and the CLI.

use crate::poset::Poset;

/// Names accepted by [`by_name`].
pub const NAMES: [&str; 4] = ["wedge3", "short-rooted", "short-hanging", "ranked9"];

/// Two minima below a common top: `1 ⋖ 3`, `2 ⋖ 3`.
pub fn wedge3() -> Poset {
    Poset::new(3, &[(1, 3), (2, 3)]).expect("fixture is naturally labeled")
}

/// The 9-element poset carrying the worked alcove example.
pub fn ranked9() -> Poset {
    Poset::new(
        9,
        &[(1, 2), (1, 3), (2, 5), (2, 6), (3, 4), (3, 5), (4, 8), (5, 7), (6, 7), (7, 9), (8, 9)],
    )
    .expect("fixture is naturally labeled")
}

pub fn chain(n: usize) -> Poset {
    let covers: Vec<_> = (1..n).map(|a| (a, a + 1)).collect();
    Poset::new(n, &covers).expect("chain is naturally labeled")
}

pub fn antichain(n: usize) -> Poset {
    Poset::new(n, &[]).expect("antichain is naturally labeled")
}

/// `1 ⋖ b` for every `b = 2..n`.
pub fn short_rooted_tree(n: usize) -> Poset {
    let covers: Vec<_> = (2..=n).map(|b| (1, b)).collect();
    Poset::new(n, &covers).expect("rooted tree is naturally labeled")
}

/// `a ⋖ n` for every `a = 1..n−1`.
pub fn short_hanging_tree(n: usize) -> Poset {
    let covers: Vec<_> = (1..n).map(|a| (a, n)).collect();
    Poset::new(n, &covers).expect("hanging tree is naturally labeled")
}

/// A poset whose `P̂` is not ranked: chains `1<2<3<5` and `1<4<5`.
pub fn non_ranked() -> Poset {
    Poset::new(5, &[(1, 2), (2, 3), (3, 5), (1, 4), (4, 5)]).expect("fixture is naturally labeled")
}

/// Trees take the default size 5.
pub fn by_name(name: &str) -> Option<Poset> {
    match name {
        "wedge3" => Some(wedge3()),
        "short-rooted" => Some(short_rooted_tree(5)),
        "short-hanging" => Some(short_hanging_tree(5)),
        "ranked9" => Some(ranked9()),
        _ => None,
    }
}

/// `chain:5`, `antichain:3`, `short-rooted:4`, `short-hanging:6`, or a fixture name.
pub fn generate(name: &str) -> Option<Poset> {
    let Some((kind, size)) = name.split_once(':') else {
        return by_name(name);
    };
    let n: usize = size.trim().parse().ok().filter(|&n| (1..=crate::poset::MAX_ELEMENTS).contains(&n))?;
    match kind.trim() {
        "chain" => Some(chain(n)),
        "antichain" => Some(antichain(n)),
        "short-rooted" => Some(short_rooted_tree(n)),
        "short-hanging" if n >= 2 => Some(short_hanging_tree(n)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        for name in NAMES {
            assert!(by_name(name).is_some(), "{name}");
        }
        assert_eq!(ranked9().n(), 9);
        assert!(!non_ranked().is_ranked_hat());
        assert_eq!(generate("chain:4").unwrap(), chain(4));
        assert!(generate("chain:0").is_none());
        assert!(generate("wheel:3").is_none());
    }
}
