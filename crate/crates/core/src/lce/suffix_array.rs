//! Suffix array by induced sorting (SA-IS) and Kasai's LCP array.

const NONE: usize = usize::MAX;

/// Suffix array of a byte string.
pub fn suffix_array(s: &[u8]) -> Vec<usize> {
    let ranks: Vec<usize> = s.iter().map(|&c| c as usize).collect();
    sa_is(&ranks, 255)
}

/// `s` is over `0..=upper`. No sentinel is required.
fn sa_is(s: &[usize], upper: usize) -> Vec<usize> {
    let n = s.len();
    match n {
        0 => return Vec::new(),
        1 => return vec![0],
        2 => return if s[0] < s[1] { vec![0, 1] } else { vec![1, 0] },
        _ => {}
    }

    // is_s[i]: suffix i is S-type (smaller than suffix i + 1).
    let mut is_s = vec![false; n];
    for i in (0..n - 1).rev() {
        is_s[i] = if s[i] == s[i + 1] {
            is_s[i + 1]
        } else {
            s[i] < s[i + 1]
        };
    }

    // Bucket boundaries: sum_l[c] is where L-suffixes starting with c begin,
    // sum_s[c] where S-suffixes starting with c begin.
    let mut sum_l = vec![0usize; upper + 2];
    let mut sum_s = vec![0usize; upper + 2];
    for i in 0..n {
        if is_s[i] {
            sum_l[s[i] + 1] += 1;
        } else {
            sum_s[s[i]] += 1;
        }
    }
    for c in 0..=upper {
        sum_s[c] += sum_l[c];
        if c < upper {
            sum_l[c + 1] += sum_s[c];
        }
    }

    let induce = |lms: &[usize], sa: &mut [usize]| {
        sa.fill(NONE);
        let mut buf = sum_s.clone();
        for &d in lms {
            if d == n {
                continue;
            }
            sa[buf[s[d]]] = d;
            buf[s[d]] += 1;
        }
        buf.copy_from_slice(&sum_l);
        sa[buf[s[n - 1]]] = n - 1;
        buf[s[n - 1]] += 1;
        for i in 0..n {
            let v = sa[i];
            if v != NONE && v >= 1 && !is_s[v - 1] {
                sa[buf[s[v - 1]]] = v - 1;
                buf[s[v - 1]] += 1;
            }
        }
        buf.copy_from_slice(&sum_l);
        for i in (0..n).rev() {
            let v = sa[i];
            if v != NONE && v >= 1 && is_s[v - 1] {
                buf[s[v - 1] + 1] -= 1;
                sa[buf[s[v - 1] + 1]] = v - 1;
            }
        }
    };

    let mut lms_map = vec![NONE; n + 1];
    let mut lms = Vec::new();
    for i in 1..n {
        if !is_s[i - 1] && is_s[i] {
            lms_map[i] = lms.len();
            lms.push(i);
        }
    }
    let m = lms.len();

    let mut sa = vec![NONE; n];
    induce(&lms, &mut sa);

    if m > 0 {
        let mut sorted_lms: Vec<usize> =
            sa.iter().copied().filter(|&v| lms_map[v] != NONE).collect();
        let mut reduced = vec![0usize; m];
        let mut reduced_upper = 0;
        reduced[lms_map[sorted_lms[0]]] = 0;
        for k in 1..m {
            let (mut l, mut r) = (sorted_lms[k - 1], sorted_lms[k]);
            let end_l = if lms_map[l] + 1 < m {
                lms[lms_map[l] + 1]
            } else {
                n
            };
            let end_r = if lms_map[r] + 1 < m {
                lms[lms_map[r] + 1]
            } else {
                n
            };
            let mut same = true;
            if end_l - l != end_r - r {
                same = false;
            } else {
                while l < end_l && s[l] == s[r] {
                    l += 1;
                    r += 1;
                }
                if l == n || s[l] != s[r] {
                    same = false;
                }
            }
            if !same {
                reduced_upper += 1;
            }
            reduced[lms_map[sorted_lms[k]]] = reduced_upper;
        }

        let reduced_sa = sa_is(&reduced, reduced_upper);
        for (slot, &r) in sorted_lms.iter_mut().zip(&reduced_sa) {
            *slot = lms[r];
        }
        induce(&sorted_lms, &mut sa);
    }
    sa
}

/// Inverse permutation of `sa`.
pub fn rank_array(sa: &[usize]) -> Vec<usize> {
    let mut rank = vec![0; sa.len()];
    for (r, &p) in sa.iter().enumerate() {
        rank[p] = r;
    }
    rank
}

/// Kasai et al.: `lcp[r]` is the common prefix length of suffixes `sa[r - 1]`
/// and `sa[r]`; `lcp[0] = 0`.
pub fn lcp_array(s: &[u8], sa: &[usize], rank: &[usize]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        if rank[i] == 0 {
            h = 0;
            continue;
        }
        let j = sa[rank[i] - 1];
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[rank[i]] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_sa(s: &[u8]) -> Vec<usize> {
        let mut sa: Vec<usize> = (0..s.len()).collect();
        sa.sort_by(|&a, &b| s[a..].cmp(&s[b..]));
        sa
    }

    #[test]
    fn known_inputs() {
        for s in [
            &b""[..],
            b"a",
            b"ba",
            b"banana",
            b"mississippi",
            b"aaaaaaaa",
            b"abababab",
        ] {
            assert_eq!(suffix_array(s), naive_sa(s), "{:?}", s);
        }
    }

    #[test]
    fn kasai_banana() {
        let s = b"banana";
        let sa = suffix_array(s);
        assert_eq!(sa, vec![5, 3, 1, 0, 4, 2]);
        assert_eq!(lcp_array(s, &sa, &rank_array(&sa)), vec![0, 1, 3, 0, 0, 2]);
    }

    proptest! {
        #[test]
        fn matches_sorting(s in prop::collection::vec(0u8..4, 0..200)) {
            let sa = suffix_array(&s);
            prop_assert_eq!(&sa, &naive_sa(&s));
            let lcp = lcp_array(&s, &sa, &rank_array(&sa));
            for r in 1..s.len() {
                let (a, b) = (sa[r - 1], sa[r]);
                let direct = s[a..].iter().zip(&s[b..]).take_while(|(x, y)| x == y).count();
                prop_assert_eq!(lcp[r] as usize, direct);
            }
        }

        #[test]
        fn full_byte_range(s in prop::collection::vec(any::<u8>(), 0..100)) {
            prop_assert_eq!(suffix_array(&s), naive_sa(&s));
        }
    }
}
