#pragma once

#define MCX_VERSION "0.1.0"
