use std::ffi::{CStr, CString};
use std::ptr;

use tropex_ffi::*;

const G_CONFLICT: &str = "V a red\nV b red\nV c red\nV d blue\nE a b\nE b c\nE c a\nE a d\nE d a\n";

fn graph(text: &str) -> *mut TropexGraph {
    let text = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { tropex_graph_parse(text.as_ptr(), &mut g) }, TropexStatus::Ok);
    g
}

fn last_error() -> String {
    let p = tropex_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_string_lossy().into_owned();
    tropex_string_free(p);
    s
}

unsafe fn metrics(g: *const TropexGraph, s: *const TropexCycleSet) -> (usize, usize) {
    let (mut v, mut c) = (0, 0);
    assert_eq!(tropex_validate(g, s, &mut v, &mut c), TropexStatus::Ok);
    (v, c)
}

#[test]
fn solve_each_objective() {
    let g = graph(G_CONFLICT);
    unsafe {
        assert_eq!(
            (
                tropex_graph_vertex_count(g),
                tropex_graph_edge_count(g),
                tropex_graph_color_count(g)
            ),
            (4, 5, 2)
        );
        let expected = [(3, 1), (2, 2), (3, 1), (2, 2)];
        for (obj, want) in [
            TROPEX_OBJECTIVE_MAX_VERTICES,
            TROPEX_OBJECTIVE_MAX_COLORS,
            TROPEX_OBJECTIVE_MAX_COLORS_AMONG_MAX_VERTICES,
            TROPEX_OBJECTIVE_MAX_VERTICES_AMONG_MAX_COLORS,
        ]
        .into_iter()
        .zip(expected)
        {
            let mut s = ptr::null_mut();
            assert_eq!(tropex_solve(g, obj, 0, 0, &mut s), TropexStatus::Ok);
            assert_eq!(metrics(g, s), want);
            tropex_cycle_set_free(s);
        }
        let mut s = ptr::null_mut();
        assert_eq!(tropex_solve(g, 9, 0, 0, &mut s), TropexStatus::InvalidArgument);
        assert!(last_error().contains("objective"));
        tropex_graph_free(g);
    }
}

#[test]
fn cycle_access_and_text() {
    let g = graph(G_CONFLICT);
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(
            tropex_solve(g, TROPEX_OBJECTIVE_MAX_VERTICES, 0, 0, &mut s),
            TropexStatus::Ok
        );
        assert_eq!(tropex_cycle_set_len(s), 1);
        let mut buf = [usize::MAX; 4];
        let mut len = 0;
        assert_eq!(
            tropex_cycle_vertices(g, s, 0, buf.as_mut_ptr(), 2, &mut len),
            TropexStatus::InvalidArgument
        );
        assert_eq!(len, 3);
        assert_eq!(
            tropex_cycle_vertices(g, s, 0, buf.as_mut_ptr(), 4, &mut len),
            TropexStatus::Ok
        );
        assert_eq!(&buf[..3], &[0, 1, 2]);
        assert_eq!(
            tropex_cycle_vertices(g, s, 1, buf.as_mut_ptr(), 4, &mut len),
            TropexStatus::InvalidArgument
        );

        let mut text = ptr::null_mut();
        assert_eq!(tropex_solution_to_text(g, s, &mut text), TropexStatus::Ok);
        let text = take_string(text);
        assert_eq!(text, "C a b c\n");
        let c = CString::new(text).unwrap();
        let mut back = ptr::null_mut();
        assert_eq!(tropex_solution_parse(g, c.as_ptr(), &mut back), TropexStatus::Ok);
        assert_eq!(metrics(g, back), (3, 1));
        tropex_cycle_set_free(back);
        tropex_cycle_set_free(s);
        tropex_graph_free(g);
    }
}

#[test]
fn invalid_solutions_are_reported() {
    let g = graph(G_CONFLICT);
    unsafe {
        let c = CString::new("C a b c\nC a d\n").unwrap();
        let mut s = ptr::null_mut();
        assert_eq!(tropex_solution_parse(g, c.as_ptr(), &mut s), TropexStatus::Ok);
        let (mut v, mut k) = (0, 0);
        assert_eq!(tropex_validate(g, s, &mut v, &mut k), TropexStatus::InvalidSolution);
        assert!(last_error().contains('a'));
        let mut text = ptr::null_mut();
        assert_eq!(tropex_solution_to_text(g, s, &mut text), TropexStatus::InvalidSolution);
        tropex_cycle_set_free(s);

        let c = CString::new("C a zz\n").unwrap();
        assert_eq!(tropex_solution_parse(g, c.as_ptr(), &mut s), TropexStatus::ParseError);
        tropex_graph_free(g);
    }
}

#[test]
fn from_arrays_and_approx() {
    let colors = [0usize, 0, 0, 1];
    let from = [0usize, 1, 2, 0, 3];
    let to = [1usize, 2, 0, 3, 0];
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            tropex_graph_from_arrays(colors.as_ptr(), 4, from.as_ptr(), to.as_ptr(), 5, &mut g),
            TropexStatus::Ok
        );
        let mut s = ptr::null_mut();
        let mut bound = 0;
        assert_eq!(tropex_approx(g, &mut s, &mut bound), TropexStatus::Ok);
        assert_eq!(bound, 3);
        let (_, c) = metrics(g, s);
        assert!(c * bound >= 2);
        tropex_cycle_set_free(s);
        tropex_graph_free(g);

        let bad_to = [1usize, 2, 0, 3, 7];
        assert_eq!(
            tropex_graph_from_arrays(colors.as_ptr(), 4, from.as_ptr(), bad_to.as_ptr(), 5, &mut g),
            TropexStatus::InvalidGraph
        );
        assert_eq!(
            tropex_graph_from_arrays(ptr::null(), 4, ptr::null(), ptr::null(), 0, &mut g),
            TropexStatus::NullPointer
        );
        let mut empty = ptr::null_mut();
        assert_eq!(
            tropex_graph_from_arrays(ptr::null(), 0, ptr::null(), ptr::null(), 0, &mut empty),
            TropexStatus::Ok
        );
        assert_eq!(tropex_approx(empty, &mut s, &mut bound), TropexStatus::InvalidArgument);
        tropex_graph_free(empty);
    }
}

#[test]
fn reduce_and_decide() {
    unsafe {
        for (dimacs, colors) in [("p cnf 2 2\n1 -2 0\n2 0\n", 3), ("p cnf 1 2\n1 0\n-1 0\n", 2)] {
            let d = CString::new(dimacs).unwrap();
            let mut g = ptr::null_mut();
            let mut map = ptr::null_mut();
            assert_eq!(
                tropex_reduce_dimacs(d.as_ptr(), TROPEX_VARIANT_PLAIN, &mut g, &mut map),
                TropexStatus::Ok
            );
            assert!(take_string(map).starts_with("VARIANT plain\n"));
            let mut s = ptr::null_mut();
            assert_eq!(
                tropex_solve(g, TROPEX_OBJECTIVE_MAX_COLORS, 0, 0, &mut s),
                TropexStatus::Ok
            );
            // all colors covered exactly when the formula is satisfiable
            assert_eq!(metrics(g, s).1 == tropex_graph_color_count(g), colors == 3);
            tropex_cycle_set_free(s);
            tropex_graph_free(g);
        }
        let d = CString::new("p cnf 3 1\n1 2 3 0\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(
            tropex_reduce_dimacs(d.as_ptr(), TROPEX_VARIANT_TWO_PER_COLOR, &mut g, ptr::null_mut()),
            TropexStatus::InvalidArgument
        );
        assert_eq!(
            tropex_reduce_dimacs(d.as_ptr(), TROPEX_VARIANT_BALANCED, &mut g, ptr::null_mut()),
            TropexStatus::Ok
        );
        assert_eq!(tropex_graph_color_count(g), 3);
        tropex_graph_free(g);
        let d = CString::new("p cnf 1 1\n0\n").unwrap();
        assert_eq!(
            tropex_reduce_dimacs(d.as_ptr(), TROPEX_VARIANT_PLAIN, &mut g, ptr::null_mut()),
            TropexStatus::ParseError
        );
    }
}

#[test]
fn budget_and_null_handling() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(tropex_solve(ptr::null(), 0, 0, 0, &mut s), TropexStatus::NullPointer);
        assert!(last_error().contains("graph"));
        assert_eq!(
            tropex_graph_parse(ptr::null(), &mut ptr::null_mut()),
            TropexStatus::NullPointer
        );
        let bad = CString::new("V a red\nE a b\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(tropex_graph_parse(bad.as_ptr(), &mut g), TropexStatus::ParseError);
        assert!(last_error().contains("line 2"));
        assert_eq!(tropex_graph_vertex_count(ptr::null()), 0);
        tropex_graph_free(ptr::null_mut());
        tropex_cycle_set_free(ptr::null_mut());
        tropex_string_free(ptr::null_mut());

        let hard = (0..500)
            .map(|seed| {
                graph(&tropex::format::write_graph(
                    &tropex::gen::gen_random(12, 6, 0.35, seed).unwrap(),
                ))
            })
            .find(|&g| {
                let status = tropex_solve(g, TROPEX_OBJECTIVE_MAX_COLORS, 20, 0, &mut s);
                if status != TropexStatus::BudgetExceeded {
                    tropex_cycle_set_free(s);
                    tropex_graph_free(g);
                }
                status == TropexStatus::BudgetExceeded
            })
            .expect("some seed needs more than 20 nodes");
        assert!(last_error().contains("budget"), "{}", last_error());
        g = hard;
        assert_eq!(
            tropex_solve(g, TROPEX_OBJECTIVE_MAX_COLORS, 0, 0, &mut s),
            TropexStatus::Ok
        );
        tropex_cycle_set_free(s);
        tropex_graph_free(g);
    }
}
