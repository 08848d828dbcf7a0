//! Holds the `acceptance` test target only. It lives in its own package so
//! that its nonzero exit, when a criterion fails, does not stop the other
//! suites in a workspace run.
