use revpat::verify::{emit_report, registry, run_suite, ReportFormat, Status};

// Frozen census. A new or renamed check must be added here on purpose.
const IDS: &[&str] = &[
    "CONSEQ_01", "CONSEQ_02", "CONSEQ_03", "CONSEQ_04", "CONSEQ_05", "CONSEQ_06", "CONSEQ_07",
    "CONSEQ_08", "CONSEQ_09", "CONSEQ_10", "CONSEQ_11", "CONSEQ_12", "L11", "L11_aperiodic",
    "L12_1", "L12_2", "L12_3", "L12_4", "L12_5", "L12_6", "L12_7", "L12_8", "L12_9", "L4",
    "L4_aperiodic", "L4_factors", "L4_odd_zeros", "L4_palindromes", "L5", "L_aRbab", "L_aRbab_index",
    "L_aabab_1", "L_aabab_2", "L_aabab_3", "L_aabab_growth_1", "L_aabab_growth_2", "L_aabab_growth_3",
    "L_aabba_01", "L_aabba_02", "L_aabba_03", "L_aabba_04", "L_aabba_05", "L_aabba_06",
    "L_aabba_07", "L_aabba_08", "L_aabba_09", "L_aabba_10", "L_aabba_11", "L_aabba_12",
    "L_aabba_13", "L_aabba_14", "L_aabba_15", "L_aabba_16", "L_aabba_17", "L_aabba_18",
    "L_aabba_19", "L_aabba_20", "L_aabba_21", "L_aabba_22", "L_aabba_23", "L_aabba_24",
    "L_aabba_25", "L_aabba_26", "L_aabba_27", "L_aabba_28", "L_aabba_29", "L_aabba_30",
    "L_aabba_31", "L_abBa_growth", "L_abbA_periodic", "L_avoid1", "L_avoid1_aperiodic",
    "L_avoid1_index", "L_div_aababb", "L_div_aabbaa", "L_div_ababba", "L_suffix01_alt",
    "L_suffix01_finite", "L_tau_prime", "L_tau_prime_aperiodic", "P_counts_aA", "P_counts_aAa",
    "P_counts_aa", "P_counts_aaa", "P_divides_1", "P_divides_2", "P_example_avoids", "P_example_meets",
    "Q_open_01", "Q_open_02", "Q_open_03", "Q_open_04", "Q_open_05", "Q_open_06", "Q_open_07",
    "Q_open_08", "Q_open_09", "Q_open_10", "Q_open_11", "Q_open_12", "Q_open_13", "Q_open_14",
    "R_palindrome_equiv", "R_palindrome_sqfree", "R_rem1_01", "R_rem1_02", "R_rem1_03",
    "R_rem1_04", "R_rem1_05", "R_rem1_06", "R_rem1_07", "R_rem1_08", "R_rem1_09", "R_rem1_10",
    "R_rem1_11", "R_rem1_12", "R_rem1_13", "R_rem1_14", "R_rem1_15", "R_rem1_16", "R_rem1_17",
    "R_rem1_18", "R_rem1_19", "R_rem1_20", "R_rem1_21", "R_rem1_22", "R_rem1_23", "R_rem1_24",
    "R_rem1_25", "R_rem1_26", "R_rem1_27", "R_rem1_28", "R_rem1_29", "R_rem1_30", "R_rem1_31",
    "R_sqfree3", "R_ternary_palindromes", "R_unary_avoid", "T2_index3_1_k2", "T2_index3_1_k3",
    "T2_index3_2_k2", "T2_index3_2_k3", "T2_index3_3_k2", "T2_index3_3_k3", "T2_index3_4_k2",
    "T2_index3_4_k3", "T2_index3_5_k2", "T2_index3_5_k3", "T2_index3_6_k2", "T2_index3_6_k3",
    "T2_index3_7_k2", "T2_index3_7_k3", "T2_index3_8_k2", "T2_index3_8_k3", "T2_unavoidable_1",
    "T2_unavoidable_2", "T2_unavoidable_3", "T2_unavoidable_4", "T2_unavoidable_5", "T2_unavoidable_6",
    "T_rsw", "T_rsw_base", "T_rsw_base_sqfree", "T_unary_1", "T_unary_1_rev", "T_unary_2",
    "T_unary_2_aperiodic", "T_unary_3", "T_unary_4", "T_useful", "T_useful_palindromes",
];

#[test]
fn registry_matches_frozen_census() {
    let mut ids: Vec<String> = registry().into_iter().map(|c| c.id).collect();
    ids.sort();
    let frozen: Vec<String> = IDS.iter().map(|s| s.to_string()).collect();
    assert_eq!(ids, frozen);
}

#[test]
fn every_check_has_an_anchor() {
    for c in registry() {
        assert!(!c.anchor.trim().is_empty(), "{} has no anchor", c.id);
    }
}

#[test]
fn unknown_filter_gives_flagged_empty_report() {
    let r = run_suite(Some("NO_SUCH_"), 100, 10).unwrap();
    assert!(r.rows.is_empty());
    assert!(r.unknown_filter);
    assert!(!r.all_passed());
    assert_eq!(emit_report(&r, ReportFormat::Csv), "id,anchor,expected,observed,status,ms\n");
}

#[test]
fn short_prefix_is_rejected() {
    assert!(run_suite(None, 99, 10).is_err());
}

#[test]
fn filtered_rows_pass() {
    for f in ["L4", "L12_1", "T_rsw", "L_suffix01_finite", "P_"] {
        let r = run_suite(Some(f), 2_000, 200).unwrap();
        assert!(!r.rows.is_empty(), "{f}");
        for row in &r.rows {
            assert_eq!(row.status, Status::Pass, "{}: {}", row.id, row.observed);
        }
    }
}

#[test]
fn open_questions_are_informational() {
    let r = run_suite(Some("Q_open_04"), 500, 100).unwrap();
    assert_eq!(r.rows.len(), 1);
    assert_eq!(r.rows[0].status, Status::Info);
    assert_eq!(r.rows[0].expected, "none");
}

#[test]
fn avoidance_survives_doubling_the_prefix() {
    for f in ["L_tau_prime", "L5", "L_aabab_1"] {
        for n in [1_000, 2_000] {
            let r = run_suite(Some(f), n, 100).unwrap();
            assert!(r.rows.iter().all(|row| row.status == Status::Pass), "{f} at {n}");
        }
    }
}
