use proptest::prelude::*;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = tabweb_cli::run(
        std::iter::once("tabweb").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn tab2m_prints_arcs() {
    let (code, out, _) = run(&["tab2m", "1 2 / 3 4 / 5 6"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "N=6\narc 2 3 level 1\narc 1 4 level 1\narc 4 5 level 2\narc 3 6 level 2\n"
    );
}

#[test]
fn web_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let web_path = dir.path().join("web.txt");
    let web_arg = web_path.to_str().unwrap();
    let (code, _, _) = run(&["tab2web", "1 3 / 2 5 / 4 6", "-o", web_arg]);
    assert_eq!(code, 0);
    let (code, out, _) = run(&["web2tab", web_arg]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1 3 / 2 5 / 4 6");
}

#[test]
fn extended_web_needs_flag() {
    let (_, web, _) = run(&["tab2web", "1 2 / 3 4 / 5"]);
    let (code, _, err) = run(&["web2tab", &web]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: WebError"), "{err}");
    let (code, out, _) = run(&["web2tab", "--extended", &web]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1 2 / 3 4 / 5");
}

#[test]
fn promote_and_rotate() {
    let (code, out, _) = run(&["promote", "1 4 / 2 5 / 3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 3 / 2 4 / 5\n");
    let (_, rotated, _) = run(&["rotate", "1 2 / 3 4 / 5 6"]);
    let (_, expected, _) = run(&["tab2web", "1 3 / 2 5 / 4 6"]);
    let a: tabweb::Web = rotated.parse().unwrap();
    let b: tabweb::Web = expected.parse().unwrap();
    assert_eq!(a.canonical_form(), b.canonical_form());
}

#[test]
fn shuffle_worked_example() {
    let (code, out, _) = run(&["shuffle", "--at", "3", "1 3 / 2 5 / 4 6", "1 2 / 3 4 / 5 6"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 2 4 6 / 3 5 8 10 / 7 9 11 12\n");
}

#[test]
fn join_webs() {
    let (code, out, _) = run(&["join", "--at", "1", "1 / 2 / 3", "1 / 2"]);
    assert_eq!(code, 0);
    let joined: tabweb::Web = out.parse().unwrap();
    let (_, direct, _) = run(&["tab2web", "1 2 / 3 4 / 5"]);
    let direct: tabweb::Web = direct.parse().unwrap();
    assert_eq!(joined.canonical_form(), direct.canonical_form());
}

#[test]
fn enumerate_and_count() {
    let (_, out, _) = run(&["count", "--shape", "3x2"]);
    assert_eq!(out, "5\n");
    let (_, out, _) = run(&["enumerate", "--shape", "2,2,1"]);
    assert_eq!(out.lines().count(), 5);
    let (code, _, err) = run(&["count", "--shape", "1,2"]);
    assert_eq!(code, 1);
    assert!(err.contains("bad shape"));
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = run(&["verify", "--suite", "bijection", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "ok bijection 42\n");
    let (code, _, err) = run(&["verify", "--suite", "bijection", "--n", "9"]);
    assert_eq!(code, 1);
    assert!(err.contains("VerifyError"));
    let (code, _, _) = run(&["verify", "--suite", "extended", "--n", "1"]);
    assert_eq!(code, 1);
    let (code, out, _) = run(&["verify", "--suite", "promotion-rotation", "--n", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("EXPECTED-MISMATCH"));
    let (code, out, _) = run(&["verify", "--suite", "slide-lemma", "--n", "8"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "ok slide-lemma 538\nEXPECTED-MISMATCH slide-lemma 1,2,5/3,4,6/7,8 \
         no-slide-under-shorter-row row1:predicted=8,actual=none,count=1\n"
    );
}

#[test]
fn render_depth_labels() {
    let (code, svg, _) = run(&["render", "--depths", "1 2 / 3 5 / 4 6"]);
    assert_eq!(code, 0);
    assert!(svg.contains("<svg") && svg.trim_end().ends_with("</svg>"));
    let mut labels: Vec<&str> = svg
        .split("class=\"depth\"")
        .skip(1)
        .map(|s| {
            let s = &s[s.find('>').unwrap() + 1..];
            &s[..s.find('<').unwrap()]
        })
        .collect();
    labels.sort_unstable();
    assert_eq!(labels, ["0", "1", "1", "2", "2"]);
    let (_, plain, _) = run(&["render", "1 2 / 3 5 / 4 6"]);
    assert!(!plain.contains("class=\"depth\""));
}

#[test]
fn bad_input_and_usage() {
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["tab2m"]).0, 1);
    assert_eq!(run(&["--help"]).0, 0);
    let (code, _, err) = run(&["tab2m", "2 1 / 3"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: "));
    let (code, _, err) = run(&["tab2web", "1 / 2 / 3 / 4"]);
    assert_eq!(code, 1);
    assert!(err.contains("WebError"), "{err}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn count_matches_enumerate(a in 1usize..5, b in 0usize..4, c in 0usize..3) {
        let (b, c) = (b.min(a), c.min(b.min(a)));
        let shape = format!("{a},{b},{c}");
        let (_, count, _) = run(&["count", "--shape", &shape]);
        let (_, list, _) = run(&["enumerate", "--shape", &shape]);
        prop_assert_eq!(count.trim().parse::<usize>().unwrap(), list.lines().count());
    }
}
