#pragma once

#define SHELLGA_VERSION "0.1.0"
