//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use digit_cipher::cipher::{Cipher, DecryptStatus, ScriptedSource, SeededSource};
use digit_cipher::cracker::{crack_range_with, CrackOptions, CrackRequest, CrackStatus};
use digit_cipher::files::parse_ciphertext_file;
use digit_cipher::keyschedule::{slice_schedule, MAX_CODE};
use digit_cipher::{decrypt, encrypt, ETable, Plaintext, SecretCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const REFERENCE_CODE: &str = "0135792468";
const REFERENCE_MESSAGE: &str = "O_BEAUTIFUL_FOR_SPACIOUS_SKIES,_FOR_AMBER_WAVES_OF_GRAIN.";
const REFERENCE_CIPHERTEXT: &str = include_str!("data/reference_ciphertext.txt");
const PUBLISHED_TABLE: &str = include_str!("data/published_table.tsv");

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn code(s: &str) -> SecretCode {
    SecretCode::parse(s).unwrap()
}

fn reference_code() -> SecretCode {
    code(REFERENCE_CODE)
}

fn message() -> Plaintext {
    Plaintext::new(REFERENCE_MESSAGE).unwrap()
}

fn within(limit: Duration, started: Instant) -> Result<Duration, String> {
    let elapsed = started.elapsed();
    if elapsed < limit {
        Ok(elapsed)
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

/// Independent C-sequence evaluator, straight from the recurrence.
fn independent_schedule(code: &str, count: usize) -> Vec<u32> {
    let sum: u32 = code.chars().map(|c| c.to_digit(10).unwrap()).sum();
    let mut b = vec![(sum % 100) / 10, sum % 10];
    while b.len() < count {
        let n = b.len();
        b.push((b[n - 1] + b[n - 2]) % 10);
    }
    b.truncate(count);
    b.into_iter()
        .map(|x| if x < 5 { 9 - x } else { x })
        .collect()
}

fn criterion_1_table() -> Check {
    let started = Instant::now();
    let table = ETable::for_code(&reference_code());
    let mut exact = 0;
    let mut last_digit_off = Vec::new();
    for line in PUBLISHED_TABLE.lines() {
        let (n, published) = line.split_once('\t').unwrap();
        let n: usize = n.parse().unwrap();
        let ours = table.entry(n).unwrap();
        if ours[..14] != published[..14] {
            return Err(format!(
                "E_{n}: {ours} vs published {published} differ before digit 15"
            ));
        }
        let diff = ours.parse::<i64>().unwrap() - published.parse::<i64>().unwrap();
        match diff {
            0 => exact += 1,
            -1 | 1 => last_digit_off.push(n),
            _ => {
                return Err(format!(
                    "E_{n}: {ours} vs published {published} differ by {diff}"
                ))
            }
        }
    }
    if exact + last_digit_off.len() != 40 {
        return Err("published table incomplete".into());
    }
    let elapsed = within(Duration::from_secs(1), started)?;
    Ok(format!(
        "{exact}/40 exact, ±1 on digit 15 at {last_digit_off:?}, {elapsed:?}"
    ))
}

fn criterion_2_schedule() -> Check {
    let s = slice_schedule(&reference_code(), 12);
    let expected = [5, 5, 9, 5, 6, 7, 9, 7, 7, 5, 8, 5];
    if s != expected {
        return Err(format!("schedule {s:?}"));
    }
    let prefix: u32 = s[..6].iter().map(|&c| u32::from(c)).sum();
    if prefix != 37 {
        return Err(format!("C_1..C_6 sum {prefix}"));
    }
    Ok(format!("{s:?}, C_1..C_6 = {prefix}"))
}

fn criterion_3_walkthrough() -> Check {
    let mut rng = ScriptedSource::new([3, 5, 7], "95916336133427975");
    let ct = encrypt(&Plaintext::new("O_B").unwrap(), &reference_code(), &mut rng);
    let expected = "7981295916159844612336136802423427975";
    if ct.as_str() == expected && rng.is_exhausted() {
        Ok(ct.to_string())
    } else {
        Err(format!("got {ct}"))
    }
}

fn criterion_4_full_decryption() -> Check {
    let ct = parse_ciphertext_file(REFERENCE_CIPHERTEXT).map_err(|e| e.to_string())?;
    if ct.len() != 800 {
        return Err(format!("reference ciphertext has {} digits", ct.len()));
    }
    let cipher = Cipher::new(reference_code());
    let out = cipher.decrypt(&ct);
    let split = cipher.split_payloads(&ct);
    for (i, (payload, count)) in split.payloads.iter().zip(&out.match_counts).enumerate() {
        if *count != 1 {
            println!(
                "      payload {} {payload:?} matched {count} entries",
                i + 1
            );
        }
    }
    match (&out.status, out.ok_plaintext()) {
        (DecryptStatus::Ok, Some(p)) if p == &message() => {
            Ok(format!("Ok, {} symbols recovered", p.len()))
        }
        _ => Err(format!("{:?} with {:?}", out.status, out.plaintext)),
    }
}

fn criterion_5_roundtrip() -> Check {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut ok, mut ambiguous) = (0, 0);
    for case in 0..1000 {
        let len = rng.gen_range(0..=200);
        let plaintext = Plaintext::from_indices((0..len).map(|_| rng.gen_range(1..=40))).unwrap();
        let c = SecretCode::from_value(rng.gen_range(0..=MAX_CODE)).unwrap();
        let seed: u64 = rng.gen();
        let ct = encrypt(&plaintext, &c, &mut SeededSource::seeded(seed));
        let out = decrypt(&ct, &c);
        match out.status {
            DecryptStatus::Ok if out.plaintext.as_ref() == Some(&plaintext) => ok += 1,
            DecryptStatus::Ok => return Err(format!("case {case}: Ok with wrong plaintext")),
            DecryptStatus::Ambiguous => ambiguous += 1,
            DecryptStatus::WrongCode => {
                return Err(format!("case {case}: WrongCode under true key {c}"))
            }
        }
    }
    let elapsed = within(Duration::from_secs(60), started)?;
    Ok(format!(
        "{ok} Ok, {ambiguous} Ambiguous ({:.1}%), 0 WrongCode, {elapsed:?}",
        ambiguous as f64 / 10.0
    ))
}

fn criterion_6_length_law() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for case in 0..200 {
        let len = rng.gen_range(0..=200);
        let plaintext = Plaintext::from_indices((0..len).map(|_| rng.gen_range(1..=40))).unwrap();
        let c = SecretCode::from_value(rng.gen_range(0..=MAX_CODE)).unwrap();
        let ct = encrypt(&plaintext, &c, &mut SeededSource::seeded(rng.gen()));
        let expected: u32 = independent_schedule(&c.to_string(), 2 * len).iter().sum();
        if ct.len() != expected as usize {
            return Err(format!(
                "case {case}: length {} expected {expected}",
                ct.len()
            ));
        }
    }
    let ct = encrypt(&message(), &reference_code(), &mut SeededSource::seeded(1));
    let oracle: u32 = independent_schedule(REFERENCE_CODE, 114).iter().sum();
    if ct.len() != 800 || oracle != 800 {
        return Err(format!(
            "reference message gave {} digits, oracle {oracle}",
            ct.len()
        ));
    }
    Ok("200 random cases match; reference message gives 800 digits".into())
}

fn criterion_7_crack() -> Check {
    let ct = parse_ciphertext_file(REFERENCE_CIPHERTEXT).map_err(|e| e.to_string())?;
    let started = Instant::now();
    let req = CrackRequest::new(ct.clone(), code("0135792400"), 101).map_err(|e| e.to_string())?;
    let seq = crack_range_with(&req, CrackOptions::sequential(), |_| {});
    let seq_time = within(Duration::from_secs(30), started)?;
    if seq.status != CrackStatus::Found
        || seq.code != Some(reference_code())
        || seq.plaintext != Some(message())
    {
        return Err(format!("sequential: {:?} {:?}", seq.status, seq.code));
    }
    let started = Instant::now();
    let par = crack_range_with(&req, CrackOptions::default(), |_| {});
    let par_time = started.elapsed();
    if par.code != seq.code {
        return Err(format!("parallel found {:?}", par.code));
    }
    let miss = CrackRequest::new(ct, code("0000000000"), 100).map_err(|e| e.to_string())?;
    let missed = crack_range_with(&miss, CrackOptions::default(), |_| {});
    if missed.status != CrackStatus::NotFound || missed.tried != 100 {
        return Err(format!("disjoint range gave {:?}", missed.status));
    }
    Ok(format!(
        "found {} after {} candidates ({seq_time:?} sequential, {par_time:?} parallel); disjoint range NotFound",
        seq.code.unwrap(),
        seq.tried
    ))
}

fn criterion_8_determinism() -> Check {
    let c = reference_code();
    let a = encrypt(&message(), &c, &mut SeededSource::seeded(42));
    let b = encrypt(&message(), &c, &mut SeededSource::seeded(42));
    if a != b {
        return Err("seeded encryptions differ".into());
    }
    // A fresh ciphertext so the search has real work on both paths.
    let ct = encrypt(
        &message(),
        &code("0000517333"),
        &mut SeededSource::seeded(8),
    );
    let req = CrackRequest::new(ct, code("0000517000"), 500).map_err(|e| e.to_string())?;
    let seq = crack_range_with(&req, CrackOptions::sequential(), |_| {});
    let par = crack_range_with(
        &req,
        CrackOptions {
            unit_size: 37,
            parallel: true,
        },
        |_| {},
    );
    if seq.code != par.code || seq.status != par.status || seq.code != Some(code("0000517333")) {
        return Err(format!(
            "sequential {:?} vs parallel {:?}",
            seq.code, par.code
        ));
    }
    Ok("seeded ciphertexts identical; sequential and parallel crack agree".into())
}

fn criterion_9_randomization() -> Check {
    let c = reference_code();
    let mut seen = HashSet::new();
    for seed in 0..100u64 {
        seen.insert(encrypt(&message(), &c, &mut SeededSource::seeded(seed)).into_string());
    }
    for _ in 0..5 {
        seen.insert(encrypt(&message(), &c, &mut SeededSource::from_entropy()).into_string());
    }
    if seen.len() == 105 {
        Ok("105 encryptions pairwise distinct".into())
    } else {
        Err(format!("only {} distinct of 105", seen.len()))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 E-table reproduction", criterion_1_table),
        ("2 schedule reproduction", criterion_2_schedule),
        ("3 scripted walkthrough", criterion_3_walkthrough),
        ("4 full-message decryption", criterion_4_full_decryption),
        ("5 roundtrip suite", criterion_5_roundtrip),
        ("6 ciphertext length law", criterion_6_length_law),
        ("7 crack range", criterion_7_crack),
        ("8 determinism", criterion_8_determinism),
        ("9 randomization", criterion_9_randomization),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
