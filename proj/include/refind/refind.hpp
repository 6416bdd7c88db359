// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

// Umbrella header: everything except the HTTP provider backend, which
// lives in http_provider.hpp so that consumers without an SSL toolchain
// can use the rest of the library untouched.

#include "refind/analysis.hpp"
#include "refind/classify.hpp"
#include "refind/confusion.hpp"
#include "refind/corpus.hpp"
#include "refind/errors.hpp"
#include "refind/experiment.hpp"
#include "refind/features.hpp"
#include "refind/fisher.hpp"
#include "refind/format.hpp"
#include "refind/hash.hpp"
#include "refind/html.hpp"
#include "refind/ingest.hpp"
#include "refind/io.hpp"
#include "refind/lexicon.hpp"
#include "refind/provider.hpp"
#include "refind/query.hpp"
#include "refind/report.hpp"
#include "refind/snapshot_store.hpp"
#include "refind/stats.hpp"
#include "refind/tokenize.hpp"
#include "refind/uri.hpp"
#include "refind/utf8.hpp"
