"""HTTP review service: parse uploads, store results, take confirmations.

Environment configuration:

- ``DATA_DIR``      where result files are stored (default ./markparse-data)
- ``LEXICON_PATH``  alternative lexicon JSON (default: packaged lexicon)
- ``ENGINE_CMD``    external OCR engine command for image uploads
- ``CORS_ORIGINS``  comma-separated allowed origins (default *)
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from fastapi import FastAPI, File, UploadFile
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import (
    DumpParseError,
    EngineFailure,
    EngineNotConfigured,
    EngineTimeout,
    InvalidImage,
)
from ..lexicon import default_lexicon, load_lexicon
from ..ocr import DUMP_SUFFIX
from ..pipeline import PipelineConfig, parse_document
from ..store import ConfirmConflict, InvalidCorrections, ResultStore, UnknownResult
from .schemas import ConfirmRequest, HealthModel, StoredResultModel

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def _payload_suffix(data: bytes, filename: str) -> str:
    """Classify an upload as dump or image by name, then content."""
    if filename.endswith(DUMP_SUFFIX) or filename.endswith(".json"):
        return DUMP_SUFFIX
    if data.startswith(PNG_MAGIC):
        return ".png"
    if data.startswith(b"P5"):
        return ".pgm"
    if data.lstrip()[:1] in (b"{", b"["):
        return DUMP_SUFFIX
    raise InvalidImage("payload is neither a token dump nor a PNG/PGM image")


def create_app(
    data_dir: str | Path | None = None,
    lexicon_path: str | Path | None = None,
    engine_cmd: str | None = None,
    cors_origins: list[str] | None = None,
) -> FastAPI:
    data_dir = Path(data_dir or os.environ.get("DATA_DIR", "markparse-data"))
    lexicon_path = lexicon_path or os.environ.get("LEXICON_PATH")
    engine_cmd = engine_cmd or os.environ.get("ENGINE_CMD")
    if cors_origins is None:
        cors_origins = [
            origin.strip()
            for origin in os.environ.get("CORS_ORIGINS", "*").split(",")
            if origin.strip()
        ]

    lexicon = load_lexicon(lexicon_path) if lexicon_path else default_lexicon()
    store = ResultStore(data_dir)
    app = FastAPI(title="markparse review service", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins,
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def pipeline_config(preprocess: bool, postprocess: bool) -> PipelineConfig:
        return PipelineConfig(
            preprocess=preprocess,
            postprocess=postprocess,
            engine=engine_cmd,
            lexicon=lexicon,
        )

    @app.post("/v1/parse", response_model=StoredResultModel)
    async def parse_upload(
        file: UploadFile | None = File(None),
        preprocess: bool = True,
        postprocess: bool = True,
    ):
        if file is None:
            return JSONResponse(status_code=400, content={"detail": "missing file upload"})
        data = await file.read()
        if not data:
            return JSONResponse(status_code=400, content={"detail": "empty upload"})
        try:
            suffix = _payload_suffix(data, file.filename or "")
            tmp = tempfile.NamedTemporaryFile(suffix=suffix, delete=False)
            try:
                tmp.write(data)
                tmp.close()
                result = parse_document(tmp.name, pipeline_config(preprocess, postprocess))
                # a temp-file-derived id is meaningless to the caller
                if result.source_id == Path(tmp.name).stem:
                    result.source_id = Path(file.filename or "upload").stem or "upload"
            finally:
                Path(tmp.name).unlink(missing_ok=True)
        except (DumpParseError, InvalidImage, EngineNotConfigured) as exc:
            return JSONResponse(status_code=400, content={"detail": str(exc)})
        except (EngineFailure, EngineTimeout) as exc:
            return JSONResponse(status_code=502, content={"detail": str(exc)})
        return store.create(result.to_json())

    @app.get("/v1/results/{result_id}", response_model=StoredResultModel)
    def get_result(result_id: str):
        try:
            return store.get(result_id)
        except UnknownResult as exc:
            return JSONResponse(status_code=404, content={"detail": str(exc)})

    @app.post("/v1/results/{result_id}/confirm", response_model=StoredResultModel)
    def confirm_result(result_id: str, request: ConfirmRequest):
        try:
            return store.confirm(result_id, request.corrections)
        except UnknownResult as exc:
            return JSONResponse(status_code=404, content={"detail": str(exc)})
        except InvalidCorrections as exc:
            return JSONResponse(status_code=422, content={"detail": str(exc)})
        except ConfirmConflict as exc:
            return JSONResponse(status_code=409, content={"detail": str(exc)})

    @app.get("/v1/health", response_model=HealthModel)
    def health():
        return {"status": "ok", "version": __version__}

    return app
