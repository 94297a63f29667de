use crate::kupisch::KupischSeries;

/// Every connected Nakayama algebra with `n` simples and all composition
/// lengths at most `c_max`, one per isomorphism class: cyclic series as their
/// least rotation (lexicographic order), followed by linear series ending in 1
/// (lexicographic order).
pub fn enumerate(n: usize, c_max: usize) -> Vec<KupischSeries> {
    let mut out = Vec::new();
    if n == 0 || c_max == 0 {
        return out;
    }
    let mut prefix = Vec::with_capacity(n);
    extend_cyclic(n, c_max, &mut prefix, &mut out);
    prefix.clear();
    extend_linear(n, c_max, &mut prefix, &mut out);
    out
}

fn extend_cyclic(n: usize, c_max: usize, prefix: &mut Vec<usize>, out: &mut Vec<KupischSeries>) {
    if prefix.len() == n {
        if prefix[0] + 1 >= prefix[n - 1] && is_least_rotation(prefix) {
            out.push(KupischSeries::new(prefix.clone()).expect("admissible by construction"));
        }
        return;
    }
    let low = prefix.last().map_or(2, |&c| c.saturating_sub(1).max(2));
    for c in low..=c_max {
        // a least rotation never has an entry below its first one
        if prefix.first().is_some_and(|&first| c < first) {
            continue;
        }
        prefix.push(c);
        extend_cyclic(n, c_max, prefix, out);
        prefix.pop();
    }
}

fn extend_linear(n: usize, c_max: usize, prefix: &mut Vec<usize>, out: &mut Vec<KupischSeries>) {
    if prefix.len() == n - 1 {
        if prefix.last().is_none_or(|&c| c <= 2) {
            prefix.push(1);
            out.push(KupischSeries::new(prefix.clone()).expect("admissible by construction"));
            prefix.pop();
        }
        return;
    }
    // the entry at 0-based position i is at most n - i
    let position = prefix.len();
    let low = prefix.last().map_or(2, |&c| c.saturating_sub(1).max(2));
    let high = c_max.min(n - position);
    for c in low..=high {
        prefix.push(c);
        extend_linear(n, c_max, prefix, out);
        prefix.pop();
    }
}

fn is_least_rotation(values: &[usize]) -> bool {
    let n = values.len();
    (1..n).all(|k| {
        let rotated = (0..n).map(|i| values[(i + k) % n]);
        !rotated.lt(values.iter().copied())
    })
}
