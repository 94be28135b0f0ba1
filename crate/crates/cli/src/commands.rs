use std::cmp::Ordering;

use serde_json::json;
use wfrec_core::derived::{multiset_descent_step, multiset_of, multiset_relation, MultisetDisplay};
use wfrec_core::harness::{fuzz_descent, fuzz_descent_with, is_descending_chain};
use wfrec_core::ordinal::{self, random_predecessor, Ordinal};
use wfrec_core::power::{pow_nat_random_predecessor, pow_relation};
use wfrec_core::programs::{ackermann_with_budget, fib_cov, quicksort};
use wfrec_core::{NatLess, ParseError, WellFounded};

use crate::failure::Failure;
use crate::{Order, Output};

/// Largest argument for the Fibonacci demo: its call tree is exponential.
pub const FIB_LIMIT: u64 = 32;

fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}

fn compared(o: Ordering) -> Output {
    let name = ordering_name(o);
    Output::ok(name, json!({ "result": name }))
}

/// Parses `a,b,c`; the empty string (or only whitespace) is the empty
/// list.  Errors point at the offending item.
pub fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, ParseError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut offset = 0;
    let mut out = Vec::new();
    for item in s.split(',') {
        let lead = item.len() - item.trim_start().len();
        let t = item.trim();
        out.push(
            t.parse()
                .map_err(|_| ParseError::new(offset + lead, format!("'{t}' is not a valid number")))?,
        );
        offset += item.len() + 1;
    }
    Ok(out)
}

fn parse_ordinal(s: &str, depth: usize) -> Result<Ordinal, Failure> {
    Ok(ordinal::parse_with_depth(s, depth)?)
}

pub fn ord_compare(a: &str, b: &str, depth: usize) -> Result<Output, Failure> {
    let (a, b) = (parse_ordinal(a, depth)?, parse_ordinal(b, depth)?);
    Ok(compared(ordinal::compare(&a, &b)))
}

pub fn ord_normalize(a: &str, depth: usize) -> Result<Output, Failure> {
    let s = parse_ordinal(a, depth)?.to_string();
    Ok(Output::ok(s.clone(), json!({ "result": s })))
}

pub fn pow_compare(a: &str, b: &str) -> Result<Output, Failure> {
    let rel = pow_relation(NatLess);
    let a = rel.list(parse_list(a)?)?;
    let b = rel.list(parse_list(b)?)?;
    let o = if rel.decide(&a, &b).is_some() {
        Ordering::Less
    } else if rel.decide(&b, &a).is_some() {
        Ordering::Greater
    } else {
        Ordering::Equal
    };
    Ok(compared(o))
}

fn list_text(l: &[u64]) -> String {
    let items: Vec<String> = l.iter().map(u64::to_string).collect();
    format!("[{}]", items.join(","))
}

pub fn chain(order: Order, start: &str, seed: u64, max_steps: usize, cap: u64, depth: usize) -> Result<Output, Failure> {
    let (name, chain): (&str, Vec<String>) = match order {
        Order::Nat => {
            let n: u64 = start
                .trim()
                .parse()
                .map_err(|_| ParseError::new(0, format!("'{}' is not a natural number", start.trim())))?;
            let c = fuzz_descent(&NatLess, &n, max_steps, seed)?;
            ("nat", c.iter().map(u64::to_string).collect())
        }
        Order::PowNat => {
            let rel = pow_relation(NatLess);
            let l = rel.list(parse_list(start)?)?;
            let mut sample_error = None;
            let c = fuzz_descent_with(&l.elems().to_vec(), max_steps, seed, |x, rng| {
                pow_nat_random_predecessor(x, rng).unwrap_or_else(|e| {
                    sample_error = Some(e);
                    None
                })
            })?;
            if let Some(e) = sample_error {
                return Err(e.into());
            }
            let lists: Vec<_> = c.iter().map(|x| rel.list(x.clone())).collect::<Result<_, _>>()?;
            if !is_descending_chain(&rel, &lists) {
                return Err(Failure::Internal(anyhow::anyhow!("sampled chain does not descend")));
            }
            ("pow-nat", c.iter().map(|x| list_text(x)).collect())
        }
        Order::MultisetNat => {
            let items: Vec<u64> = parse_list(start)?;
            let m = multiset_of(&NatLess, &items)?;
            let c = fuzz_descent_with(&m, max_steps, seed, |x, rng| multiset_descent_step(&NatLess, x, cap as usize, rng))?;
            if !is_descending_chain(&multiset_relation(NatLess), &c) {
                return Err(Failure::Internal(anyhow::anyhow!("sampled chain does not descend")));
            }
            ("multiset-nat", c.iter().map(|x| MultisetDisplay(x).to_string()).collect())
        }
        Order::Ord => {
            let o = parse_ordinal(start, depth)?;
            let c = fuzz_descent_with(&o, max_steps, seed, |x, rng| random_predecessor(x, rng, cap))?;
            ("ord", c.iter().map(Ordinal::to_string).collect())
        }
    };
    let text = format!("{}\nlength {}", chain.join("\n"), chain.len());
    let json = json!({
        "order": name,
        "seed": seed,
        "length": chain.len(),
        "chain": chain,
    });
    Ok(Output::ok(text, json))
}

pub fn demo_quicksort(list: &str) -> Result<Output, Failure> {
    let l: Vec<i64> = parse_list(list)?;
    let sorted = quicksort(|a: &i64, b: &i64| a <= b, &l);
    let text: Vec<String> = sorted.iter().map(i64::to_string).collect();
    Ok(Output::ok(text.join(","), json!({ "result": sorted })))
}

pub fn demo_ackermann(m: u64, n: u64, budget: u64) -> Result<Output, Failure> {
    let v = ackermann_with_budget(m, n, budget)?;
    Ok(Output::ok(v.to_string(), json!({ "result": v })))
}

pub fn demo_fib(n: u64) -> Result<Output, Failure> {
    if n > FIB_LIMIT {
        return Err(Failure::input(format!(
            "fib demo accepts n <= {FIB_LIMIT} (the course-of-values call tree is exponential)"
        )));
    }
    let v = u64::try_from(fib_cov(n)).expect("fib(32) fits in 64 bits");
    Ok(Output::ok(v.to_string(), json!({ "result": v })))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list::<u64>("3, 1,0").unwrap(), vec![3, 1, 0]);
        assert_eq!(parse_list::<u64>("").unwrap(), Vec::<u64>::new());
        assert_eq!(parse_list::<u64>("3,x").unwrap_err().position, 2);
        assert_eq!(parse_list::<u64>("3, -1").unwrap_err().position, 3);
        assert_eq!(parse_list::<i64>("2,-1").unwrap(), vec![2, -1]);
    }

    #[test]
    fn same_seed_same_chain() {
        let a = chain(Order::Ord, "w^w*2 + 3", 5, 10_000, 3, 64).unwrap().text;
        let b = chain(Order::Ord, "w^w*2 + 3", 5, 10_000, 3, 64).unwrap().text;
        assert_eq!(a, b);
    }
}
