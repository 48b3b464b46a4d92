use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

async fn call(app: &Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let builder = Request::builder().method(method).uri(uri).header("content-type", "application/json");
    let body = body.map(|b| Body::from(b.to_string())).unwrap_or_else(Body::empty);
    let response = app.clone().oneshot(builder.body(body).unwrap()).await.unwrap();
    let status = response.status();
    let bytes = response.into_body().collect().await.unwrap().to_bytes();
    (status, serde_json::from_slice(&bytes).unwrap_or(Value::Null))
}

fn gadget() -> Value {
    json!({
        "variant": "free",
        "k": 4,
        "colors": [1, 2, 4, 3, 2, 1, 3, 4],
        "edges": [[0, 1], [1, 2], [2, 3], [2, 6], [3, 4], [3, 7], [4, 5]]
    })
}

#[tokio::test]
async fn following_hints_solves_the_gadget_in_four_moves() {
    let app = flood_cli::service::router();
    let (status, created) = call(&app, "POST", "/api/game", Some(json!({ "instance": gadget() }))).await;
    assert_eq!(status, StatusCode::OK, "{created}");
    let id = created["session_id"].as_str().unwrap().to_string();
    assert_eq!(created["state"]["lower_bound"], 3);
    let mut moves = 0;
    loop {
        let (_, state) = call(&app, "GET", &format!("/api/game/{id}"), None).await;
        if state["state"]["solved"] == true {
            break;
        }
        let (status, hint) = call(&app, "GET", &format!("/api/game/{id}/hint"), None).await;
        assert_eq!(status, StatusCode::OK, "{hint}");
        assert_eq!(hint["optimal"], true);
        assert_eq!(hint["remaining_opt"], 4 - moves);
        let (status, _) = call(&app, "POST", &format!("/api/game/{id}/move"), Some(hint["move"].clone())).await;
        assert_eq!(status, StatusCode::OK);
        moves += 1;
    }
    assert_eq!(moves, 4);
}

#[tokio::test]
async fn undo_restores_the_previous_board() {
    let app = flood_cli::service::router();
    let (_, created) = call(&app, "POST", "/api/game", Some(json!({ "instance": gadget() }))).await;
    let id = created["session_id"].as_str().unwrap().to_string();
    let before = created["state"].clone();
    let (_, moved) = call(&app, "POST", &format!("/api/game/{id}/move"), Some(json!({"vertex": 2, "color": 3}))).await;
    assert_eq!(moved["state"]["move_count"], 1);
    let (status, undone) = call(&app, "POST", &format!("/api/game/{id}/undo"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(undone["state"], before);
    let (status, problem) = call(&app, "POST", &format!("/api/game/{id}/undo"), None).await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert_eq!(problem["code"], "nothing_to_undo");
}

#[tokio::test]
async fn fixed_variant_rejects_other_vertices() {
    let app = flood_cli::service::router();
    let body = json!({ "generator": {"kind": "path", "n": 5, "k": 3, "seed": 2}, "variant": "fixed", "pivot": 2 });
    let (status, created) = call(&app, "POST", "/api/game", Some(body)).await;
    assert_eq!(status, StatusCode::OK, "{created}");
    let id = created["session_id"].as_str().unwrap().to_string();
    let (status, problem) = call(&app, "POST", &format!("/api/game/{id}/move"), Some(json!({"vertex": 0, "color": 1}))).await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert_eq!(problem["code"], "variant_violation");
    let (status, solution) = call(&app, "GET", &format!("/api/game/{id}/solution"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(solution["engine"], "oracle");
    assert!(solution["witness"].as_array().unwrap().iter().all(|m| m["vertex"] == 2));
}

#[tokio::test]
async fn solution_continues_from_the_current_position() {
    let app = flood_cli::service::router();
    let (_, created) = call(&app, "POST", "/api/game", Some(json!({ "instance": gadget() }))).await;
    let id = created["session_id"].as_str().unwrap().to_string();
    call(&app, "POST", &format!("/api/game/{id}/move"), Some(json!({"vertex": 2, "color": 3}))).await;
    let (status, solution) = call(&app, "GET", &format!("/api/game/{id}/solution"), None).await;
    assert_eq!(status, StatusCode::OK, "{solution}");
    assert_eq!(solution["opt"], 3);
}

#[tokio::test]
async fn errors_are_problem_details() {
    let app = flood_cli::service::router();
    let (status, problem) = call(&app, "GET", "/api/game/missing", None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(problem["code"], "not_found");
    let bad = json!({ "instance": {"variant": "free", "k": 2, "colors": [1, 3], "edges": [[0, 1]]} });
    let (status, problem) = call(&app, "POST", "/api/game", Some(bad)).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(problem["field"], "colors[1]");
    let (_, created) = call(&app, "POST", "/api/game", Some(json!({ "instance": gadget() }))).await;
    let id = created["session_id"].as_str().unwrap().to_string();
    let (status, problem) = call(&app, "POST", &format!("/api/game/{id}/move"), Some(json!({"vertex": 99, "color": 1}))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(problem["field"], "vertex");
}
