use charnum_ffi::*;
use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { charnum_string_free(s) };
    text
}

fn last_error() -> Option<String> {
    let p = charnum_last_error();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

struct Handle(*mut CharnumEngine);

impl Handle {
    fn new() -> Self {
        let p = charnum_engine_new(6, 5);
        assert!(!p.is_null());
        Handle(p)
    }

    fn compute(&self, family: CharnumFamily, class: i32, d: i32, a: i32, b: i32, c: i32) -> Result<String, CharnumStatus> {
        let mut out = ptr::null_mut();
        match unsafe { charnum_compute(self.0, family, class, d, a, b, c, &mut out) } {
            CharnumStatus::Ok => Ok(take(out)),
            status => {
                assert!(out.is_null());
                Err(status)
            }
        }
    }
}

impl Drop for Handle {
    fn drop(&mut self) {
        unsafe { charnum_engine_free(self.0) };
    }
}

#[test]
fn computes_values() {
    let h = Handle::new();
    assert_eq!(h.compute(CharnumFamily::N, -1, 3, 8, 0, 0).unwrap(), "12");
    assert_eq!(h.compute(CharnumFamily::N, -1, 4, 11, 0, 0).unwrap(), "620");
    assert_eq!(h.compute(CharnumFamily::C, 0, 3, 7, 0, 0).unwrap(), "24");
    assert_eq!(h.compute(CharnumFamily::C, 2, 2, 0, 2, 0).unwrap(), "1/2");
    assert!(last_error().is_none());
    assert!(unsafe { charnum_engine_len(h.0) } > 0);
}

#[test]
fn status_codes() {
    let h = Handle::new();
    assert_eq!(h.compute(CharnumFamily::N, -1, 2, 3, 3, 0), Err(CharnumStatus::InvalidKey));
    assert!(last_error().unwrap().contains("3d - 1"));
    assert_eq!(h.compute(CharnumFamily::C, 9, 3, 7, 0, 0), Err(CharnumStatus::InvalidArgument));
    assert_eq!(h.compute(CharnumFamily::N, -1, 7, 20, 0, 0), Err(CharnumStatus::DegreeGuard));
    assert_eq!(h.compute(CharnumFamily::C, 3, 3, 6, 0, 0), Err(CharnumStatus::NotComputable));
    let mut out = ptr::null_mut();
    let status = unsafe { charnum_compute(ptr::null_mut(), CharnumFamily::N, -1, 1, 2, 0, 0, &mut out) };
    assert_eq!(status, CharnumStatus::NullArgument);
    assert!(charnum_engine_new(0, 5).is_null());
    assert!(last_error().is_some());
    unsafe {
        charnum_engine_free(ptr::null_mut());
        charnum_string_free(ptr::null_mut());
    }
}

#[test]
fn kontsevich_numbers() {
    let want = ["1", "1", "12", "620", "87304", "26312976", "14616808192"];
    for (d, w) in (1..=7).zip(want) {
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { charnum_kontsevich(d, &mut out) }, CharnumStatus::Ok);
        assert_eq!(take(out), w);
    }
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { charnum_kontsevich(0, &mut out) }, CharnumStatus::InvalidArgument);
}

#[test]
fn renders_tables() {
    let h = Handle::new();
    let mut out = ptr::null_mut();
    let status = unsafe { charnum_render_table(h.0, CharnumFamily::N, -1, 1, CharnumFormat::Csv, &mut out) };
    assert_eq!(status, CharnumStatus::Ok);
    assert_eq!(take(out), "a,b,c,value\n0,0,1,1\n0,2,0,0\n1,1,0,0\n2,0,0,1\n");
    let status = unsafe { charnum_render_table(h.0, CharnumFamily::N, 0, 1, CharnumFormat::Csv, &mut out) };
    assert_eq!(status, CharnumStatus::InvalidArgument);
    let status = unsafe { charnum_render_table(h.0, CharnumFamily::C, 2, 3, CharnumFormat::Json, &mut out) };
    assert_eq!(status, CharnumStatus::Ok);
    assert!(take(out).contains("\"class\": \"h2\""));
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = CString::new(dir.path().join("store.jsonl").to_str().unwrap()).unwrap();
    let first = Handle::new();
    first.compute(CharnumFamily::N, -1, 4, 11, 0, 0).unwrap();
    assert_eq!(unsafe { charnum_cache_export(first.0, path.as_ptr()) }, CharnumStatus::Ok);

    let second = Handle::new();
    assert_eq!(unsafe { charnum_cache_import(second.0, path.as_ptr()) }, CharnumStatus::Ok);
    assert_eq!(unsafe { charnum_engine_len(second.0) }, unsafe { charnum_engine_len(first.0) });

    std::fs::write(dir.path().join("bad.jsonl"), "{\"family\":\"N\"}\n").unwrap();
    let bad = CString::new(dir.path().join("bad.jsonl").to_str().unwrap()).unwrap();
    let before = unsafe { charnum_engine_len(second.0) };
    assert_eq!(unsafe { charnum_cache_import(second.0, bad.as_ptr()) }, CharnumStatus::Cache);
    assert!(last_error().unwrap().starts_with("line 1"));
    assert_eq!(unsafe { charnum_engine_len(second.0) }, before);
    assert_eq!(unsafe { charnum_cache_import(second.0, ptr::null()) }, CharnumStatus::NullArgument);
}

#[test]
fn errors_are_per_thread() {
    let h = Handle::new();
    assert!(h.compute(CharnumFamily::N, -1, 2, 3, 3, 0).is_err());
    let other = std::thread::spawn(last_error).join().unwrap();
    assert!(other.is_none());
    assert!(last_error().is_some());
}

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

fn c_compiler() -> Option<String> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    Command::new(&cc).arg("--version").output().ok().filter(|o| o.status.success()).map(|_| cc)
}

#[test]
fn c_program_links_against_static_library() {
    let Some(cc) = c_compiler() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = target_dir().join("libcharnum_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let out = tempfile::tempdir().unwrap();
    let exe = out.path().join("smoke");
    let status = Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&exe)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "OK");
}
